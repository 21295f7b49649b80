#include <blab/disk.hpp>

#include <doctest.h>

#include <random>

using namespace blab;

namespace {
constexpr double kPi = 3.141592653589793;
}

TEST_SUITE_BEGIN("disk");

TEST_CASE("point construction enforces the open disk") {
    CHECK_THROWS_AS(DiskPoint(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(DiskPoint(0.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(DiskPoint(1.0 - 5e-16, 0.0), std::domain_error);
    CHECK_NOTHROW(DiskPoint(1.0 - 1e-14, 0.0));

    CHECK_THROWS_AS(BoundaryPoint(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(BoundaryPoint(1.0 + 1e-11, 0.0), std::domain_error);
    const BoundaryPoint xi(1.0 + 1e-13, 0.0);
    CHECK(std::abs(xi.value()) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pseudo-hyperbolic distance formula values") {
    CHECK(pseudo_hyperbolic(DiskPoint(0.0, 0.0), DiskPoint(0.5, 0.0)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pseudo_hyperbolic(DiskPoint(0.0, 0.5), DiskPoint(0.0, 0.5)) == 0.0);
    // rho(0.3, 0.6) = 0.3 / 0.82
    CHECK(pseudo_hyperbolic(DiskPoint(0.3, 0.0), DiskPoint(0.6, 0.0)) ==
          doctest::Approx(0.3 / 0.82).epsilon(1e-15));
}

TEST_CASE("cayley forward values") {
    const CayleyMap phi{BoundaryPoint(1.0, 0.0)};
    CHECK(std::abs(phi.forward(DiskPoint(0.0, 0.0)) - complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(phi.forward(DiskPoint(1.0 / 3.0, 0.0)) - complex(2.0, 0.0)) < 1e-15);
    const CayleyMap phi_i{BoundaryPoint(0.0, 1.0)};
    CHECK(std::abs(phi_i.forward(DiskPoint(0.0, 0.0)) - complex(1.0, 0.0)) < 1e-15);
    CHECK(phi.forward(DiskPoint(0.2, 0.7)).real() > 0.0);
}

TEST_CASE("cayley inverse values and domain") {
    const CayleyMap phi{BoundaryPoint(1.0, 0.0)};
    CHECK(std::abs(phi.inverse(complex(1.0, 0.0)).value()) < 1e-15);
    CHECK(std::abs(phi.inverse(complex(2.0, 0.0)).value() - complex(1.0 / 3.0, 0.0)) < 1e-15);
    CHECK(std::abs(phi.inverse(complex(3.0, 0.0)).value() - complex(0.5, 0.0)) < 1e-15);
    CHECK_THROWS_AS(phi.inverse(complex(0.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(phi.inverse(complex(-0.5, 0.0)), std::domain_error);
}

TEST_CASE("principal argument branch") {
    CHECK(principal_arg(complex(1.0, 0.0)) == 0.0);
    CHECK(principal_arg(complex(0.0, 1.0)) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(principal_arg(complex(-1.0, -1.0)) == doctest::Approx(-3.0 * kPi / 4).epsilon(1e-15));
    CHECK_THROWS_AS(principal_arg(complex(0.0, 0.0)), std::domain_error);
    // conjugation flips the sign off the real axis
    const complex z(0.3, -0.8);
    CHECK(principal_arg(std::conj(z)) == -principal_arg(z));
}

TEST_CASE("metric symmetry is exact on 1e4 random pairs") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&] {
        const double r = 0.9999 * std::sqrt(unit(rng));
        const double a = 2.0 * kPi * unit(rng);
        return complex(r * std::cos(a), r * std::sin(a));
    };
    for (int i = 0; i < 10000; ++i) {
        const complex z = draw(), w = draw();
        CHECK(pseudo_hyperbolic(z, w) == pseudo_hyperbolic(w, z));
    }
}

TEST_CASE("moebius invariance of rho") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&](double cap) {
        const double r = cap * std::sqrt(unit(rng));
        const double a = 2.0 * kPi * unit(rng);
        return complex(r * std::cos(a), r * std::sin(a));
    };
    auto moebius = [](complex a, complex z) { return (a - z) / (1.0 - std::conj(a) * z); };
    for (int i = 0; i < 10000; ++i) {
        const complex a = draw(0.95), z = draw(0.99), w = draw(0.99);
        const double before = pseudo_hyperbolic(z, w);
        const double after = pseudo_hyperbolic(moebius(a, z), moebius(a, w));
        CHECK(std::fabs(before - after) < 1e-12);
    }
}

TEST_CASE("half-plane transfer identity for rho") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&] {
        const double r = 0.95 * std::sqrt(unit(rng));
        const double a = 2.0 * kPi * unit(rng);
        return DiskPoint(r * std::cos(a), r * std::sin(a));
    };
    for (int i = 0; i < 10000; ++i) {
        const BoundaryPoint xi = i % 2 == 0 ? BoundaryPoint(1.0, 0.0)
                                            : BoundaryPoint(std::polar(1.0, 2.0 * kPi * unit(rng)));
        const CayleyMap phi(xi);
        const DiskPoint z = draw(), w = draw();
        const complex pz = phi.forward(z), pw = phi.forward(w);
        const double transfer = std::abs(pz - pw) / std::abs(std::conj(pz) + pw);
        CHECK(std::fabs(pseudo_hyperbolic(z, w) - transfer) < 1e-12);
    }
}

TEST_CASE("cayley round trip on 1e4 random points") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const double r = 0.9999 * std::sqrt(unit(rng));
        const double a = 2.0 * kPi * unit(rng);
        const DiskPoint z(r * std::cos(a), r * std::sin(a));
        const BoundaryPoint xi(std::polar(1.0, 2.0 * kPi * unit(rng)));
        const CayleyMap phi(xi);
        CHECK(std::abs(phi.inverse(phi.forward(z)).value() - z.value()) < 1e-12);
    }
}

TEST_SUITE_END();
