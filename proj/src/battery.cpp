#include "plateau/battery.hpp"

#include "plateau/derived.hpp"
#include "plateau/function_zoo.hpp"

namespace plateau {

namespace {

void add_quadratics(std::vector<BatteryEntry>& out, int p, int n_max) {
    for (int n = 2; n <= n_max; ++n)
        for (int s = 0; s <= n - 2; ++s)
            for (int e : {1, -1}) {
                PFunction f = quadratic_instance(p, n, s, e);
                out.push_back({"quad p=" + std::to_string(p) + " n=" + std::to_string(n) + " s=" + std::to_string(s) +
                                   (e > 0 ? " (+)" : " (-)"),
                               f});
            }
}

struct TwoLevel {
    int p, n1, n2, s;
    std::vector<int> u, v;
};

}  // namespace

std::vector<BatteryEntry> builtin_battery() {
    std::vector<BatteryEntry> out;
    add_quadratics(out, 3, 6);
    add_quadratics(out, 5, 4);
    const std::vector<TwoLevel> mixed = {
        {3, 1, 1, 0, {1}, {2}},       {3, 1, 1, 0, {2}, {1}},       {3, 2, 1, 0, {1, 1}, {1, 2}},
        {3, 2, 1, 0, {1, 2}, {1, 1}}, {3, 1, 1, 1, {1}, {2}},       {3, 2, 1, 1, {1, 1}, {1, 2}},
        {3, 1, 1, 2, {2}, {1}},       {3, 3, 1, 0, {1, 1, 1}, {1, 1, 2}}, {5, 1, 1, 0, {1}, {2}},
        {5, 2, 1, 0, {1, 1}, {1, 2}}, {5, 1, 1, 1, {2}, {1}},
    };
    for (const auto& t : mixed) {
        PFunction f = two_level_quadratic(t.p, t.n1, t.n2, t.s, t.u, t.v);
        out.push_back({f.label, f});
    }
    return out;
}

std::vector<BatteryEntry> extended_battery() {
    auto out = builtin_battery();
    out.push_back({"example-1", example_function(1)});
    out.push_back({"example-2", example_function(2)});
    return out;
}

}  // namespace plateau
