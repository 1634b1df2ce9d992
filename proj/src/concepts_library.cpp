// --------------------------------------------------------------------
// Builtin concept program sources. Kept in sync with concepts/*.gcl
// (checked by the library test suite).
// --------------------------------------------------------------------
#include "geoclidean/concepts.hpp"

namespace geoclidean {

const std::vector<TaskSource>& builtin_task_sources() {
    static const std::vector<TaskSource> sources = {
        {"angle", Split::Elements,
R"GCL(concept: angle
l1 = line(p1(), p2())
l2 = line(p2, p3())
)GCL",
R"GCL(concept: angle_close
l1 = line(p1(), p2())
l2 = line(p4(l1), p3())
)GCL",
R"GCL(concept: angle_far
l1 = line(p1(), p2())
l2 = line(p4(), p3())
)GCL"},
        {"perp_bisector", Split::Elements,
R"GCL(concept: perp_bisector
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
l2 = line(p3(c1, c2), p4(c1, c2))
)GCL",
R"GCL(concept: perp_bisector_close
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
l2 = line(p3(c1, c2), p4(c1))
)GCL",
R"GCL(concept: perp_bisector_far
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
l2 = line(p3(c1, c2), p4())
)GCL"},
        {"ang_bisector", Split::Elements,
R"GCL(concept: ang_bisector
l1 = line(p1(), p2())
l2 = line(p1, p3())
c1* = circle(p1, p4(l1))
c2* = circle(p4, p1)
c3* = circle(p5(c1, l2), p1)
l3 = line(p1, p6(c2, c3))
)GCL",
R"GCL(concept: ang_bisector_close
l1 = line(p1(), p2())
l2 = line(p1, p3())
c1* = circle(p1, p4(l1))
c2* = circle(p4, p1)
c3* = circle(p5(c1, l2), p1)
l3 = line(p1, p6(c2))
)GCL",
R"GCL(concept: ang_bisector_far
l1 = line(p1(), p2())
l2 = line(p1, p3())
c1* = circle(p1, p4(l1))
c2* = circle(p4, p1)
c3* = circle(p5(c1, l2), p1)
l3 = line(p1, p6())
)GCL"},
        {"sixty_ang", Split::Elements,
R"GCL(concept: sixty_ang
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
l2 = line(p1, p3(c1, c2))
)GCL",
R"GCL(concept: sixty_ang_close
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
l2 = line(p1, p3(c1))
)GCL",
R"GCL(concept: sixty_ang_far
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
l2 = line(p1, p3())
)GCL"},
        {"radii", Split::Elements,
R"GCL(concept: radii
c1 = circle(p1(), p2())
l1 = line(p1, p3(c1))
l2 = line(p1, p4(c1))
)GCL",
R"GCL(concept: radii_close
c1 = circle(p1(), p2())
l1 = line(p1, p3(c1))
l2 = line(p1, p4())
)GCL",
R"GCL(concept: radii_far
c1 = circle(p1(), p2())
l1 = line(p1, p3())
l2 = line(p1, p4())
)GCL"},
        {"diameter", Split::Elements,
R"GCL(concept: diameter
c1 = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
l1 = line(p2, p5(c1, c4))
)GCL",
R"GCL(concept: diameter_close
c1 = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
l1 = line(p2, p5(c1))
)GCL",
R"GCL(concept: diameter_far
c1 = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
l1 = line(p2, p5())
)GCL"},
        {"segment", Split::Elements,
R"GCL(concept: segment
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4(c1))
)GCL",
R"GCL(concept: segment_close
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4())
)GCL",
R"GCL(concept: segment_far
c1 = circle(p1(), p2())
l1 = line(p3(), p4())
)GCL"},
        {"rectilinear", Split::Elements,
R"GCL(concept: rectilinear
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p4())
l4 = line(p4, p5())
l5 = line(p5, p1)
)GCL",
R"GCL(concept: rectilinear_close
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p4())
l4 = line(p4, p5())
l5 = line(p5, p6(l1))
)GCL",
R"GCL(concept: rectilinear_far
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p4())
l4 = line(p4, p5())
l5 = line(p5, p6())
)GCL"},
        {"triangle", Split::Elements,
R"GCL(concept: triangle
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p1)
)GCL",
R"GCL(concept: triangle_close
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p4(l1))
)GCL",
R"GCL(concept: triangle_far
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p4())
)GCL"},
        {"quadrilateral", Split::Elements,
R"GCL(concept: quadrilateral
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p4())
l4 = line(p4, p1)
)GCL",
R"GCL(concept: quadrilateral_close
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p4())
l4 = line(p4, p5(l1))
)GCL",
R"GCL(concept: quadrilateral_far
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p4())
l4 = line(p4, p5())
)GCL"},
        {"eq_t", Split::Elements,
R"GCL(concept: eq_t
l1 = line(p1(), p2())
c1* = circle(p1(), p2())
c2* = circle(p2(), p1())
l2 = line(p1(), p3(c1, c2))
l3 = line(p2(), p3(c1, c2))
)GCL",
R"GCL(concept: eq_t_close
l1 = line(p1(), p2())
c1* = circle(p1(), p2())
c2* = circle(p2(), p1())
l2 = line(p1(), p3(c1))
l3 = line(p2(), p3)
)GCL",
R"GCL(concept: eq_t_far
l1 = line(p1(), p2())
c1* = circle(p1(), p2())
c2* = circle(p2(), p1())
l2 = line(p1(), p3())
l3 = line(p2(), p3)
)GCL"},
        {"right_ang_t", Split::Elements,
R"GCL(concept: right_ang_t
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
l1 = line(p2, p5(c1, c4))
l2 = line(p2, p6(c1))
l3 = line(p6, p5)
)GCL",
R"GCL(concept: right_ang_t_close
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
l1 = line(p2, p5(c1))
l2 = line(p2, p6(c1))
l3 = line(p6, p5)
)GCL",
R"GCL(concept: right_ang_t_far
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
l1 = line(p2, p5())
l2 = line(p2, p6(c1))
l3 = line(p6, p5)
)GCL"},
        {"square", Split::Elements,
R"GCL(concept: square
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p2, p5(c1, c4))
c6* = circle(p5, p2)
lt* = line(p6(c5, c6), p7(c5, c6))
c7* = circle(p8(c1, lt), p1)
l2 = line(p2, p9(c2, c7))
l3 = line(p9, p8)
l4 = line(p8, p1)
)GCL",
R"GCL(concept: square_close
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p2, p5(c1, c4))
c6* = circle(p5, p2)
lt* = line(p6(c5, c6), p7(c5, c6))
c7* = circle(p8(c1, lt), p1)
l2 = line(p2, p9(c2))
l3 = line(p9, p8)
l4 = line(p8, p1)
)GCL",
R"GCL(concept: square_far
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p2, p5(c1, c4))
c6* = circle(p5, p2)
lt* = line(p6(c5, c6), p7(c5, c6))
c7* = circle(p8(c1, lt), p1)
l2 = line(p2, p9())
l3 = line(p9, p8)
l4 = line(p8, p1)
)GCL"},
        {"rhombus", Split::Elements,
R"GCL(concept: rhombus
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
c3* = circle(p3(c1), p1)
l2 = line(p2, p4(c2, c3))
l3 = line(p4, p3)
l4 = line(p3, p1)
)GCL",
R"GCL(concept: rhombus_close
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
c3* = circle(p3(c1), p1)
l2 = line(p2, p4(c2))
l3 = line(p4, p3)
l4 = line(p3, p1)
)GCL",
R"GCL(concept: rhombus_far
l1 = line(p1(), p2())
c1* = circle(p1, p2)
c2* = circle(p2, p1)
c3* = circle(p3(c1), p1)
l2 = line(p2, p4())
l3 = line(p4, p3)
l4 = line(p3, p1)
)GCL"},
        {"oblong", Split::Elements,
R"GCL(concept: oblong
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p5(c1), p1)
c6* = circle(p6(c1, c5), p1)
c7* = circle(p7(c1, c6), p1)
l1 = line(p2, p5)
l2 = line(p5, p8(c1, c4))
l3 = line(p8, p9(c1, c7))
l4 = line(p9, p2)
)GCL",
R"GCL(concept: oblong_close
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p5(c1), p1)
c6* = circle(p6(c1, c5), p1)
c7* = circle(p7(c1, c6), p1)
l1 = line(p2, p5)
l2 = line(p5, p8(c1, c4))
l3 = line(p8, p9(c1))
l4 = line(p9, p2)
)GCL",
R"GCL(concept: oblong_far
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p5(c1), p1)
c6* = circle(p6(c1, c5), p1)
c7* = circle(p7(c1, c6), p1)
l1 = line(p2, p5)
l2 = line(p5, p8(c1, c4))
l3 = line(p8, p9())
l4 = line(p9, p2)
)GCL"},
        {"rhomboid", Split::Elements,
R"GCL(concept: rhomboid
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p1, p5())
c6* = circle(p5, p1)
c7* = circle(p6(c5, c6), p1)
c8* = circle(p7(c5, c7), p1)
l1 = line(p2, p5)
l2 = line(p5, p8(c1, c4))
l3 = line(p8, p9(c5, c8))
l4 = line(p9, p2)
)GCL",
R"GCL(concept: rhomboid_close
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p1, p5())
c6* = circle(p5, p1)
c7* = circle(p6(c5, c6), p1)
c8* = circle(p7(c5, c7), p1)
l1 = line(p2, p5)
l2 = line(p5, p8(c1, c4))
l3 = line(p8, p9(c5))
l4 = line(p9, p2)
)GCL",
R"GCL(concept: rhomboid_far
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p1, p5())
c6* = circle(p5, p1)
c7* = circle(p6(c5, c6), p1)
c8* = circle(p7(c5, c7), p1)
l1 = line(p2, p5)
l2 = line(p5, p8(c1, c4))
l3 = line(p8, p9())
l4 = line(p9, p2)
)GCL"},
        {"parallel_l", Split::Elements,
R"GCL(concept: parallel_l
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p1, p5())
c6* = circle(p5, p1)
c7* = circle(p6(c5, c6), p1)
c8* = circle(p7(c5, c7), p1)
l1 = line(p2, p5)
l2 = line(p8(c1, c4), p9(c5, c8))
)GCL",
R"GCL(concept: parallel_l_close
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p1, p5())
c6* = circle(p5, p1)
c7* = circle(p6(c5, c6), p1)
c8* = circle(p7(c5, c7), p1)
l1 = line(p2, p5)
l2 = line(p8(c1, c4), p9(c5))
)GCL",
R"GCL(concept: parallel_l_far
c1* = circle(p1(), p2())
c2* = circle(p2, p1)
c3* = circle(p3(c1, c2), p1)
c4* = circle(p4(c1, c3), p1)
c5* = circle(p1, p5())
c6* = circle(p5, p1)
c7* = circle(p6(c5, c6), p1)
c8* = circle(p7(c5, c7), p1)
l1 = line(p2, p5)
l2 = line(p8(c1, c4), p9())
)GCL"},
        {"lll", Split::Constraints,
R"GCL(concept: lll
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
l3 = line(p5(l2), p6())
)GCL",
R"GCL(concept: lll_close
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
l3 = line(p5(), p6())
)GCL",
R"GCL(concept: lll_far
l1 = line(p1(), p2())
l2 = line(p3(), p4())
l3 = line(p5(), p6())
)GCL"},
        {"cll", Split::Constraints,
R"GCL(concept: cll
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4(c1))
l2 = line(p5(c1), p6(c1))
)GCL",
R"GCL(concept: cll_close
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4(c1))
l2 = line(p5(c1), p6())
)GCL",
R"GCL(concept: cll_far
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4(c1))
l2 = line(p5(), p6())
)GCL"},
        {"llc", Split::Constraints,
R"GCL(concept: llc
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
c1 = circle(p5(l2), p6(l1))
)GCL",
R"GCL(concept: llc_close
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
c1 = circle(p5(l2), p6())
)GCL",
R"GCL(concept: llc_far
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
c1 = circle(p5(), p6())
)GCL"},
        {"ccl", Split::Constraints,
R"GCL(concept: ccl
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p4())
l1 = line(p5(c1, c2), p6())
)GCL",
R"GCL(concept: ccl_close
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p4())
l1 = line(p5(c1), p6())
)GCL",
R"GCL(concept: ccl_far
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p4())
l1 = line(p5(), p6())
)GCL"},
        {"lcc", Split::Constraints,
R"GCL(concept: lcc
l1 = line(p1(), p2())
c1 = circle(p3(l1), p4())
c2 = circle(p5(l1), p6(c1))
)GCL",
R"GCL(concept: lcc_close
l1 = line(p1(), p2())
c1 = circle(p3(l1), p4())
c2 = circle(p5(l1), p6())
)GCL",
R"GCL(concept: lcc_far
l1 = line(p1(), p2())
c1 = circle(p3(l1), p4())
c2 = circle(p5(), p6())
)GCL"},
        {"ccc", Split::Constraints,
R"GCL(concept: ccc
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p1)
c3 = circle(p4(c1, c2), p5(c2))
)GCL",
R"GCL(concept: ccc_close
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p1)
c3 = circle(p4(c1, c2), p5())
)GCL",
R"GCL(concept: ccc_far
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p1)
c3 = circle(p4(), p5(c2))
)GCL"},
        {"llll", Split::Constraints,
R"GCL(concept: llll
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p4(l1), p5(l2))
l4 = line(p6(l3), p7())
)GCL",
R"GCL(concept: llll_close
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p4(l1), p5(l2))
l4 = line(p6(), p7())
)GCL",
R"GCL(concept: llll_far
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p4(), p5())
l4 = line(p6(l3), p7())
)GCL"},
        {"lllc", Split::Constraints,
R"GCL(concept: lllc
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
l3 = line(p5(l1), p6(l2))
c1 = circle(p7(l3), p8(l2))
)GCL",
R"GCL(concept: lllc_close
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
l3 = line(p5(l1), p6(l2))
c1 = circle(p7(l3), p8())
)GCL",
R"GCL(concept: lllc_far
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
l3 = line(p5(l1), p6(l2))
c1 = circle(p7(), p8())
)GCL"},
        {"clll", Split::Constraints,
R"GCL(concept: clll
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4(c1))
l2 = line(p4, p5(c1))
l3 = line(p5, p3)
)GCL",
R"GCL(concept: clll_close
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4(c1))
l2 = line(p4, p5())
l3 = line(p5, p3)
)GCL",
R"GCL(concept: clll_far
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4())
l2 = line(p4, p5())
l3 = line(p5, p3)
)GCL"},
        {"clcl", Split::Constraints,
R"GCL(concept: clcl
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4())
c2 = circle(p5(l1), p2)
l2 = line(p6(c2), p7(c1))
)GCL",
R"GCL(concept: clcl_close
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4())
c2 = circle(p5(l1), p2)
l2 = line(p6(c2), p7())
)GCL",
R"GCL(concept: clcl_far
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4())
c2 = circle(p5(l1), p2)
l2 = line(p6(), p7())
)GCL"},
        {"llcc", Split::Constraints,
R"GCL(concept: llcc
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
c1 = circle(p4, p5(l1))
c2 = circle(p6(c1), p7(l2))
)GCL",
R"GCL(concept: llcc_close
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
c1 = circle(p4, p5(l1))
c2 = circle(p6(c1), p7())
)GCL",
R"GCL(concept: llcc_far
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
c1 = circle(p4, p5())
c2 = circle(p6(c1), p7())
)GCL"},
        {"cccl", Split::Constraints,
R"GCL(concept: cccl
c1 = circle(p1(), p2())
c2 = circle(p2, p1)
c3 = circle(p3(c1, c2), p1)
l1 = line(p1, p3)
)GCL",
R"GCL(concept: cccl_close
c1 = circle(p1(), p2())
c2 = circle(p2, p1)
c3 = circle(p3(c1), p1)
l1 = line(p1, p3)
)GCL",
R"GCL(concept: cccl_far
c1 = circle(p1(), p2())
c2 = circle(p2, p1)
c3 = circle(p3(), p1)
l1 = line(p1, p3)
)GCL"},
        {"clcc", Split::Constraints,
R"GCL(concept: clcc
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4())
c2 = circle(p5(l1), p3)
c3 = circle(p6(c1, c2), p5)
)GCL",
R"GCL(concept: clcc_close
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4())
c2 = circle(p5(l1), p3)
c3 = circle(p6(c1), p5)
)GCL",
R"GCL(concept: clcc_far
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4())
c2 = circle(p5(l1), p3)
c3 = circle(p6(), p5)
)GCL"},
        {"cccc", Split::Constraints,
R"GCL(concept: cccc
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p1)
c3 = circle(p4(c2), p3)
c4 = circle(p5(c3), p4)
)GCL",
R"GCL(concept: cccc_close
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p1)
c3 = circle(p4(c2), p3)
c4 = circle(p5(), p4)
)GCL",
R"GCL(concept: cccc_far
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p1)
c3 = circle(p4(), p3)
c4 = circle(p5(), p4)
)GCL"},
        {"tll", Split::Constraints,
R"GCL(concept: tll
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p1)
l4 = line(p4(l1), p5(l2))
l5 = line(p6(l4), p7())
)GCL",
R"GCL(concept: tll_close
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p1)
l4 = line(p4(l1), p5(l2))
l5 = line(p6(), p7())
)GCL",
R"GCL(concept: tll_far
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p1)
l4 = line(p4(), p5())
l5 = line(p6(l4), p7())
)GCL"},
        {"llt", Split::Constraints,
R"GCL(concept: llt
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
l3 = line(p5(l2), p6(l1))
l4 = line(p6, p7())
l5 = line(p7, p5)
)GCL",
R"GCL(concept: llt_close
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
l3 = line(p5(l2), p6())
l4 = line(p6, p7())
l5 = line(p7, p5)
)GCL",
R"GCL(concept: llt_far
l1 = line(p1(), p2())
l2 = line(p3(l1), p4())
l3 = line(p5(), p6())
l4 = line(p6, p7())
l5 = line(p7, p5)
)GCL"},
        {"tcl", Split::Constraints,
R"GCL(concept: tcl
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p1)
c1 = circle(p4(l1), p5(l2))
l4 = line(p6(c1), p7(l3))
)GCL",
R"GCL(concept: tcl_close
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p1)
c1 = circle(p4(l1), p5(l2))
l4 = line(p6(c1), p7())
)GCL",
R"GCL(concept: tcl_far
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p1)
c1 = circle(p4(l1), p5(l2))
l4 = line(p6(), p7())
)GCL"},
        {"clt", Split::Constraints,
R"GCL(concept: clt
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4())
l2 = line(p5(l1), p6(c1))
l3 = line(p6, p7(l1))
l4 = line(p7, p5)
)GCL",
R"GCL(concept: clt_close
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4())
l2 = line(p5(l1), p6())
l3 = line(p6, p7(l1))
l4 = line(p7, p5)
)GCL",
R"GCL(concept: clt_far
c1 = circle(p1(), p2())
l1 = line(p3(c1), p4())
l2 = line(p5(), p6(c1))
l3 = line(p6, p7())
l4 = line(p7, p5)
)GCL"},
        {"tcc", Split::Constraints,
R"GCL(concept: tcc
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p1)
c1 = circle(p4(l1), p5(l3))
c2 = circle(p6(c1), p7(l2))
)GCL",
R"GCL(concept: tcc_close
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p1)
c1 = circle(p4(l1), p5(l3))
c2 = circle(p6(c1), p7())
)GCL",
R"GCL(concept: tcc_far
l1 = line(p1(), p2())
l2 = line(p2, p3())
l3 = line(p3, p1)
c1 = circle(p4(l1), p5(l3))
c2 = circle(p6(), p7())
)GCL"},
        {"cct", Split::Constraints,
R"GCL(concept: cct
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p1)
l1 = line(p4(c1, c2), p5(c2))
l2 = line(p5, p6(c1))
l3 = line(p6, p4)
)GCL",
R"GCL(concept: cct_close
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p1)
l1 = line(p4(c1), p5(c2))
l2 = line(p5, p6(c1))
l3 = line(p6, p4)
)GCL",
R"GCL(concept: cct_far
c1 = circle(p1(), p2())
c2 = circle(p3(c1), p1)
l1 = line(p4(), p5(c2))
l2 = line(p5, p6(c1))
l3 = line(p6, p4)
)GCL"},
    };
    return sources;
}

}  // namespace geoclidean
