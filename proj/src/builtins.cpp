#include "hfk11/builtins.hpp"

#include <map>

namespace hfk {

namespace {

Rational R(long num, long den = 1) { return Rational(num, den); }

Point P(long xn, long xd, long yn, long yd) { return {Rational(xn, xd), Rational(yn, yd)}; }

PLLoop horizontal_axis() {
    PLLoop beta;
    beta.vertices = {P(0, 1, 0, 1)};
    beta.period = {1, 0};
    return beta;
}

Diagram make_unknot() {
    Diagram d;
    d.alpha.vertices = {P(1, 2, 1, 4)};
    d.alpha.period = {0, 1};
    d.beta = horizontal_axis();
    d.w = P(1, 4, 1, 8);
    d.z = P(3, 4, 1, 8);
    return d;
}

// Right-handed trefoil: alpha crosses the beta axis three times; the two
// bigons carry one basepoint each. The chain runs through the crossings at
// x = .3, .5, .7 and closes one level up.
Diagram make_trefoil_right() {
    Diagram d;
    d.alpha.vertices = {
        P(3, 10, -1, 2),   {R(3, 10), R(11, 100)}, {R(1, 2), R(11, 100)},
        {R(1, 2), R(-11, 100)}, {R(7, 10), R(-11, 100)}, {R(7, 10), R(1, 2)},
    };
    d.alpha.period = {0, 1};
    d.beta = horizontal_axis();
    d.z = {R(2, 5), R(1, 20)};    // inside the upper bigon
    d.w = {R(3, 5), R(-1, 20)};   // inside the lower bigon
    return d;
}

// Figure-eight: five crossings, nested arcs on both sides of the axis.
// Crossing order along alpha is x = .9, .3, .5, .7, .1; the w basepoint sits
// in the small upper bigon, z in the small lower one.
Diagram make_figure_eight() {
    Diagram d;
    auto v = [&](long xn, long yn) { return Point{Rational(xn, 100), Rational(yn, 100)}; };
    d.alpha.vertices = {
        v(90, -50), v(90, 21),  v(30, 21),  v(30, -11), v(50, -11),
        v(50, 11),  v(70, 11),  v(70, -21), v(10, -21), v(10, 50),
    };
    d.alpha.period = {0, 1};
    d.beta = horizontal_axis();
    d.w = {R(3, 5), R(1, 20)};
    d.z = {R(2, 5), R(-1, 20)};
    return d;
}

// 9_42: nine crossings in the order (9,6,7,8,5,2,3,4,1) along the beta axis.
// The two hump pairs and the two dip pairs are nested so that single w and z
// points meet, through their lattice translates, exactly the faces the
// differential requires. The wide arcs are staggered in small level steps
// (every horizontal piece is shorter than one period), and two deep notches
// in the long lower arc open the corridor used by the closing segment, which
// drifts four cells to the left while climbing one.
Diagram make_knot_9_42() {
    Diagram d;
    auto v = [&](long xn, long yn) {
        // x in thousandths, y in ten-thousandths
        return Point{Rational(xn, 1000), Rational(yn, 10000)};
    };
    d.alpha.vertices = {
        v(4995, -9590),  // delivery column, rises through crossing 1
        v(4995, 400),    // a1 height .040
        v(4120, 400),
        v(4120, -100),   // crossing 2 -> dip a2 at -.010
        v(4260, -100),
        v(4260, 240),    // crossing 3 -> hump a3 at .024
        v(4460, 240),
        v(4460, -260),   // crossing 4 -> shallow floor piece C at -.026
        v(4380, -260),
        v(4380, -320),   // step to floor B at -.032
        v(4048, -320),
        v(4048, -9592),  // right deep notch at -.9592
        v(3980, -9592),
        v(3980, -320),
        v(3480, -320),
        v(3480, -280),   // step to floor A at -.028
        v(3048, -280),
        v(3048, -9594),  // left deep notch at -.9594
        v(2980, -9594),
        v(2980, -280),
        v(2560, -280),
        v(2560, 398),    // crossing 5 -> upper piece E at .0398
        v(2480, 398),
        v(2480, 415),    // step to the long middle piece M at .0415
        v(2048, 415),
        v(2048, 403),    // shallow notch at .0403 (clears the exit column)
        v(1980, 403),
        v(1980, 415),
        v(1490, 415),
        v(1490, 405),    // step to piece P1 at .0405
        v(1100, 405),
        v(1100, -200),   // crossing 6 -> dip a6 at -.020
        v(1280, -200),
        v(1280, 180),    // crossing 7 -> hump a7 at .018
        v(1440, 180),
        v(1440, -250),   // crossing 8 -> a8 at -.025
        v(1045, -250),
        v(1045, 410),    // crossing 9, exit jog level .041
    };
    d.alpha.period = {-4, 1};
    d.beta = horizontal_axis();
    d.w = {R(34, 25), R(1, 200)};    // (1.36, .005)
    d.z = {R(211, 50), R(-1, 200)};  // (4.22, -.005)
    return d;
}

}  // namespace

Diagram builtin_diagram(const std::string& name) {
    if (name == "unknot") return make_unknot();
    if (name == "trefoil_right") return make_trefoil_right();
    if (name == "trefoil_left") return reflect_diagram(make_trefoil_right());
    if (name == "figure_eight") return make_figure_eight();
    if (name == "knot_9_42") return make_knot_9_42();
    throw UnknownDiagram("no builtin diagram named '" + name + "'");
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "unknot", "trefoil_left", "trefoil_right", "figure_eight", "knot_9_42",
    };
    return names;
}

}  // namespace hfk
