#include "matcat/builtin.hpp"

namespace matcat {

AlgebraPtr linear_quiver(int n, const Field& F)
{
    static const char* names = "abcdefghijklmnopqrstuvwxyz";
    if (n < 1 || n > 26)
        throw InputError("linear quiver size out of range");
    Quiver q;
    for (int i = 1; i <= n; ++i)
        q.vertices.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i)
        q.arrows.push_back({std::string(1, names[i]), i, i + 1});
    return build_path_algebra(q, {}, n + 1, F);
}

AlgebraPtr truncated_delta(int n, const Field& F)
{
    Quiver q;
    for (int i = 0; i <= n; ++i)
        q.vertices.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        q.arrows.push_back({"alpha" + std::to_string(i), i, i + 1});
    std::vector<Relation> rels;
    for (int i = 1; i < n; ++i)
        rels.push_back({{Scalar(1), {i - 1, i}}});
    return build_path_algebra(q, rels, 3, F);
}

AlgebraPtr dual_numbers(const Field& F)
{
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"x", 0, 0}};
    return build_path_algebra(q, {{{Scalar(1), {0, 0}}}}, 3, F);
}

}  // namespace matcat
