#include <doctest.h>

#include "hfk11/arrangement.hpp"
#include "hfk11/builtins.hpp"
#include "hfk11/errors.hpp"

using namespace hfk;

TEST_CASE("unknot lift: one point, empty differential") {
    auto arr = stabilize(builtin_diagram("unknot"));
    CHECK(arr.point_count() == 1);
    CHECK(arr.positive_mu1_classes().empty());
}

TEST_CASE("trefoil lift: three points and exactly two positive classes") {
    auto arr = stabilize(builtin_diagram("trefoil_right"));
    REQUIRE(arr.point_count() == 3);
    auto classes = arr.positive_mu1_classes();
    REQUIRE(classes.size() == 2);
    // one class carries the z basepoint, the other the w basepoint
    bool saw_z = false, saw_w = false;
    for (const auto& c : classes) {
        CHECK(c.maslov == 1);
        if (c.n_w == 0 && c.n_z == 1) saw_z = true;
        if (c.n_w == 1 && c.n_z == 0) saw_w = true;
    }
    CHECK(saw_z);
    CHECK(saw_w);
}

TEST_CASE("antisymmetry and additivity of disk classes") {
    for (const char* name : {"trefoil_right", "figure_eight"}) {
        CAPTURE(name);
        auto arr = stabilize(builtin_diagram(name));
        int n = arr.point_count();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                auto fwd = arr.disk_class(x, y);
                auto bwd = arr.disk_class(y, x);
                for (const auto& [f, m] : fwd.multiplicities) {
                    auto it = bwd.multiplicities.find(f);
                    REQUIRE(it != bwd.multiplicities.end());
                    CHECK(it->second == -m);
                }
                CHECK(fwd.n_w == -bwd.n_w);
                CHECK(fwd.n_z == -bwd.n_z);
            }
        // additivity through a middle point, including the Maslov index
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (x == y || y == z || x == z) continue;
                    auto xy = arr.disk_class(x, y);
                    auto yz = arr.disk_class(y, z);
                    auto xz = arr.disk_class(x, z);
                    std::map<int, long> sum = xy.multiplicities;
                    for (const auto& [f, m] : yz.multiplicities) {
                        sum[f] += m;
                        if (sum[f] == 0) sum.erase(f);
                    }
                    CHECK(sum == xz.multiplicities);
                    CHECK(xz.n_w == xy.n_w + yz.n_w);
                    CHECK(arr.maslov_index(xz) ==
                          arr.maslov_index(xy) + arr.maslov_index(yz));
                }
    }
}

TEST_CASE("positive classes have nonnegative basepoint multiplicities") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        auto arr = stabilize(builtin_diagram(name));
        for (const auto& c : arr.positive_mu1_classes()) {
            CHECK(c.n_w >= 0);
            CHECK(c.n_z >= 0);
        }
    }
}

TEST_CASE("basepoint counts agree between lattice sums and face data") {
    for (const char* name : {"trefoil_right", "figure_eight", "knot_9_42"}) {
        CAPTURE(name);
        auto arr = stabilize(builtin_diagram(name));
        int n = arr.point_count();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                auto c = arr.disk_class(x, y);
                long w = 0, z = 0;
                for (const auto& [f, m] : c.multiplicities) {
                    w += m * arr.faces()[f].w_count;
                    z += m * arr.faces()[f].z_count;
                }
                CHECK(w == c.n_w);
                CHECK(z == c.n_z);
            }
    }
}

TEST_CASE("maslov agrees with the canonical-disk decomposition on small diagrams") {
    for (const char* name : {"unknot", "trefoil_right", "trefoil_left", "figure_eight"}) {
        CAPTURE(name);
        auto arr = stabilize(builtin_diagram(name));
        int n = arr.point_count();
        if (n < 2) continue;
        // each consecutive class is an embedded disk with constant local
        // multiplicity +-1; its index is that sign
        std::vector<int> eps;
        for (int k = 0; k + 1 < n; ++k) {
            auto c = arr.disk_class(k, k + 1);
            REQUIRE_FALSE(c.multiplicities.empty());
            long sign = c.multiplicities.begin()->second;
            for (const auto& [f, m] : c.multiplicities) CHECK(m == sign);
            CHECK((sign == 1 || sign == -1));
            eps.push_back(static_cast<int>(sign));
            CHECK(arr.maslov_index(c) == sign);
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                int expected = 0;
                for (int k = std::min(x, y); k < std::max(x, y); ++k) expected += eps[k];
                if (x > y) expected = -expected;
                CHECK(arr.maslov_index(arr.disk_class(x, y)) == expected);
            }
    }
}

TEST_CASE("corner multiplicities on the trefoil bigons") {
    auto arr = stabilize(builtin_diagram("trefoil_right"));
    for (const auto& c : arr.positive_mu1_classes()) {
        CHECK(arr.corner_multiplicity(c, c.from) == Rational(1, 4));
        CHECK(arr.corner_multiplicity(c, c.to) == Rational(1, 4));
        // the third corner is away from the bigon: all four faces vanish
        for (int p = 0; p < arr.point_count(); ++p)
            if (p != c.from && p != c.to) CHECK(arr.corner_multiplicity(c, p) == Rational(0));
    }
}

TEST_CASE("stabilization is reproducible and windows grow on demand") {
    auto d = builtin_diagram("trefoil_right");
    auto a1 = stabilize(d);
    auto a2 = stabilize(d);
    CHECK(a1.point_count() == a2.point_count());
    CHECK(a1.window_scale() == a2.window_scale());
    CHECK(a1.debug_json() == a2.debug_json());
}
