#include <catch2/catch.hpp>

#include "hdeg/hilbert.hpp"
#include "hdeg/theorems.hpp"
#include "oracles.hpp"

using namespace hdeg;

namespace {

std::vector<Polynomial> polys(const RingSpec& R, const std::vector<std::string>& ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(parse_polynomial(s, R));
    return out;
}

} // namespace

TEST_CASE("parameter ideal validation", "[hilbert]") {
    RingSpec R({"X", "Y", "Z"});
    ModulePresentation S = ring_as_module(R);
    CHECK(check_parameter_ideal(polys(R, {"X", "Y", "Z"}), S, R).ok);
    CHECK_FALSE(check_parameter_ideal(polys(R, {"X", "Y"}), S, R).ok);       // too few
    CHECK_FALSE(check_parameter_ideal(polys(R, {"X", "Y", "X"}), S, R).ok);  // not finite colength
    CHECK_FALSE(check_parameter_ideal(polys(R, {"X", "Y", "X+1"}), S, R).ok); // inhomogeneous
    ModulePresentation zero = quotient_ring_module(R, polys(R, {"1"}));
    CHECK_FALSE(check_parameter_ideal(polys(R, {"X", "Y", "Z"}), zero, R).ok);
}

TEST_CASE("length table agrees with the dense oracle", "[hilbert][oracle]") {
    RingSpec R({"X", "Y", "Z"});
    ModulePresentation M = quotient_ring_module(R, polys(R, {"X*Y"}));
    std::vector<Polynomial> Q = polys(R, {"X+Y", "Z"});
    HilbertSamuelTable table(M, Q, R);
    for (long n = 0; n <= 5; ++n)
        CHECK(table.value(n) == oracle::length_mod_power(M, Q, n, R));
}

TEST_CASE("polynomial ring coefficients are (1, 0, ..., 0)", "[hilbert]") {
    RingSpec R({"X", "Y", "Z"});
    HilbertSamuelResult hs = hilbert_coefficients(ring_as_module(R), polys(R, {"X", "Y", "Z"}), R);
    CHECK(hs.dim == 3);
    CHECK(hs.e == std::vector<ZZ>{1, 0, 0, 0});
    CHECK(hs.postulation_index == 0);
    CHECK(euler_characteristic_chi1(hs) == 0);
    CHECK(sectional_genus(hs) == 0);
}

TEST_CASE("hypersurface of degree two doubles the multiplicity", "[hilbert]") {
    RingSpec R({"X", "Y", "Z"});
    ModulePresentation M = quotient_ring_module(R, polys(R, {"X^2 - Y*Z"}));
    HilbertSamuelResult hs = hilbert_coefficients(M, polys(R, {"Y", "Z"}), R);
    CHECK(hs.dim == 2);
    CHECK(multiplicity(hs) == 2);
}

TEST_CASE("known length at the first power of the mixed example", "[hilbert]") {
    ExampleInstance ex = build_example(ExampleFamily::mixed_plane_line, 1);
    HilbertSamuelTable table(ex.module, ex.Q, ex.ring);
    CHECK(table.value(0) == 2);
    CHECK(table.value(1) == 6);
    CHECK(table.value(1) == oracle::length_mod_power(ex.module, ex.Q, 1, ex.ring));
}

TEST_CASE("coefficients reproduce every table entry past the postulation index",
          "[hilbert][property]") {
    std::vector<ExampleInstance> cases = {
        build_example(ExampleFamily::idealization, 2),
        build_example(ExampleFamily::mixed_plane_line, 1),
        build_example(ExampleFamily::two_planes, 2, 1),
    };
    for (const auto& ex : cases) {
        HilbertSamuelResult hs = hilbert_coefficients(ex.module, ex.Q, ex.ring);
        for (long n = hs.postulation_index; n < static_cast<long>(hs.values.size()); ++n)
            CHECK(hs.values[static_cast<std::size_t>(n)] ==
                  detail::eval_hilbert_polynomial(hs.e, n, hs.dim));
    }
}

TEST_CASE("e1 is nonpositive for parameter ideals", "[hilbert][property]") {
    std::vector<ExampleInstance> cases = {
        build_example(ExampleFamily::idealization, 1),
        build_example(ExampleFamily::idealization, 3),
        build_example(ExampleFamily::two_planes, 2, 1),
        build_example(ExampleFamily::mixed_plane_line, 2),
    };
    RingSpec R2({"X", "Y"});
    cases.push_back({R2, ring_as_module(R2), polys(R2, {"X", "Y"})});
    for (const auto& ex : cases) {
        HilbertSamuelResult hs = hilbert_coefficients(ex.module, ex.Q, ex.ring);
        CHECK(hs.e.at(1) <= 0);
        CHECK(euler_characteristic_chi1(hs) >= 0);
    }
}

TEST_CASE("fit window slides past irregular initial values", "[hilbert]") {
    // S/(X^2, X*Y^2) with Q = (Y): H(0) = 2 deviates from H(n) = n + 3
    RingSpec R({"X", "Y"});
    ModulePresentation M = quotient_ring_module(R, polys(R, {"X^2", "X*Y^2"}));
    HilbertSamuelResult hs = hilbert_coefficients(M, polys(R, {"Y"}), R);
    CHECK(hs.dim == 1);
    CHECK(hs.e.at(0) == 1);
    CHECK(hs.postulation_index >= 1);
    for (long n = 0; n <= 4; ++n)
        CHECK(hs.values.at(static_cast<std::size_t>(n)) ==
              oracle::length_mod_power(M, polys(R, {"Y"}), n, R));
}

TEST_CASE("table cap surfaces as a resource error", "[hilbert]") {
    RingSpec R({"X", "Y"});
    HilbertSamuelTable table(ring_as_module(R), polys(R, {"X", "Y"}), R);
    CHECK_THROWS_AS(table.value(31), cap_exceeded);
}
