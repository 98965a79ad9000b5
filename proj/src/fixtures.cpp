#include "hyperfuzz/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace hyperfuzz::fixtures {

namespace {

Hyperfield must_field(HyperfieldResult r, const char* what) {
    if (!r.field) throw std::logic_error(std::string("fixture failed its own audit: ") + what);
    return *r.field;
}

HypervectorSpace must_space(HvsResult r, const char* what) {
    if (!r.space) throw std::logic_error(std::string("fixture failed its own audit: ") + what);
    return *r.space;
}

}  // namespace

Hyperfield krasner() {
    Carrier c({"0", "1"});
    ElemSet s0 = ElemSet::single(2, 0);
    ElemSet s1 = ElemSet::single(2, 1);
    ElemSet both = s0.united(s1);
    HyperOp add(2, {s0, s1, s1, both});
    BinOp mul(2, {0, 0, 0, 1});
    return must_field(check_hyperfield(c, add, mul), "krasner");
}

Hyperfield gf(int p) {
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("gf: unsupported modulus");
    std::vector<std::string> names;
    for (int i = 0; i < p; ++i) names.push_back(std::to_string(i));
    Carrier c(std::move(names));
    std::vector<ElemSet> add_cells;
    std::vector<int> mul_cells;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            add_cells.push_back(ElemSet::single(p, (a + b) % p));
            mul_cells.push_back((a * b) % p);
        }
    HyperOp add(p, std::move(add_cells));
    BinOp mul(p, std::move(mul_cells));
    return must_field(check_hyperfield(c, add, mul), "gf");
}

HypervectorSpace field_over_itself(const Hyperfield& f) {
    const int n = f.carrier.size();
    std::vector<ElemSet> cells;
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x) cells.push_back(ElemSet::single(n, f.mul.at(a, x)));
    ScalarAction action(n, n, std::move(cells));
    return must_space(check_hypervector_space(f, f.carrier, f.add, action), "field_over_itself");
}

HypervectorSpace k_over_k() { return field_over_itself(krasner()); }

HypervectorSpace gf2_plane() {
    Hyperfield f = gf(2);
    Carrier vc({"00", "01", "10", "11"});
    std::vector<ElemSet> add_cells;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) add_cells.push_back(ElemSet::single(4, a ^ b));
    HyperOp vadd(4, std::move(add_cells));
    std::vector<ElemSet> act_cells;
    for (int a = 0; a < 2; ++a)
        for (int x = 0; x < 4; ++x) act_cells.push_back(ElemSet::single(4, a == 0 ? 0 : x));
    ScalarAction action(2, 4, std::move(act_cells));
    return must_space(check_hypervector_space(f, vc, vadd, action), "gf2_plane");
}

Ifs worked_field_overlay() {
    return Ifs({Degree(1, 1), Degree(1, 2)}, {Degree(0, 1), Degree(1, 4)});
}

Ifs worked_vector_overlay() {
    return Ifs({Degree(1, 2), Degree(1, 3)}, {Degree(1, 4), Degree(1, 2)});
}

Ifs swapped_vector_overlay() {
    return Ifs({Degree(1, 3), Degree(1, 2)}, {Degree(1, 4), Degree(1, 2)});
}

}  // namespace hyperfuzz::fixtures
