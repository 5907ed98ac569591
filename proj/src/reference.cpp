#include "mixedmoore/reference.hpp"

namespace mixedmoore::reference {

const std::array<std::string_view, 27> order14_diameter4{
    "MW?H??GC@_?EAO??E?_O?B@_??L_??W?@_",
    "MW?H??K??_QC??o?I??oCC??oGH@?ACH??",
    "MW?H??K??_QC??o?@c?_CC??oE?I??EH??",
    "MW?H??K??_QC??o?B?A_CC??sC?AAACH??",
    "MW?H??K??_QC??o?BC?_CC??oCIA??K@_?",
    "MW?H??G@@_?E?OA?E?_O?B?oG?OCG?KE??",
    "MW?H??G@@_?E?OA?E?_O?B@_G?O?W?WE??",
    "MW?H??G@@_?E?OA?E?_O?B__?OO?W?WE??",
    "MW?H??G@@_?EAO??E?_O?B?__OO?W?WE??",
    "MW?H??G@@_?EAO??E?_O?B?_c?O?W?WAO?",
    "MW?H??G@@_?EAO??E?_O?B@_??W?W?WE??",
    "MW?H??G@@_?EAO??E?_O?B@_??X?G?WA@?",
    "MW?H??G@@_?EAO??E?_O?BO_??W?W?WAO?",
    "MW?H??G@@_?EAO??E?_O?BO_??WCG?WA@?",
    "MW?H??GC@_?E?OA?E?_O?B?o?OD_?_G?@_",
    "MW?H??GC@_?E?OA?E?_O?B@_?CD_?_G?@_",
    "MW?H??GC@_?E?OA?E?_O?B@_G?D_??W?@_",
    "MW?H??GC@_?E?OA?E?_O?B__?OD_??W?@_",
    "MW?H??GC@_?E?P??E?_O?B__??L_??K?O_",
    "MW?H??GC@_?EAO??E?_O?B?o??Kc??KC?_",
    "MW?H??K??OQG?@_?E?OO?B__C?O?IAG@@?",
    "MW?H??K??_Q@?@_?E?OO?BO_??WGG?WH??",
    "MW?H??K??_U??@_?E?OO?B?___O?W?WH??",
    "MW?H??K??_U??@_?E?OO?B?_g?O?W?W@_?",
    "MW?H??K??`A@?@_?E?OO?BO_??MO?AG?C_",
    "MW?H??GO@_?E?OO?B?_O?BW???MA?@G?C_",
    "MW?H??GC@_?E?OO?A__O?B_?OK?c?OG?@_",
};

const std::array<BoundsRow, 15> bounds_table{{
    {2, 6, 6, 6},
    {3, 11, 10, 10},
    {4, 19, 14, 14},
    {5, 32, 24, 26},
    {6, 53, 34, 48},
    {7, 87, 54, 78},
    {8, 142, 72, 126},
    {9, 231, 112, 206},
    {10, 375, 144, 336},
    {11, 608, 240, 544},
    {12, 985, 336, 882},
    {13, 1595, 544, 1428},
    {14, 2582, 800, 2312},
    {15, 4179, 1024, 3744},
    {16, 6763, 1600, 6058},
}};

const std::array<SearchSpaceRow, 3> search_space_table{{
    {3, 396},
    {4, 889980},
    {5, 0},
}};

const std::array<std::array<int, 8>, 8> gplus2_adjacency{{
    {1, 1, 0, 0, 0, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 1, 0},
    {0, 0, 1, 0, 1, 0, 0, 0},
    {0, 0, 0, 1, 0, 1, 0, 0},
    {0, 1, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 1},
    {0, 0, 0, 0, 0, 0, 1, 1},
}};

const std::array<std::array<int, 8>, 8> gplus2_fourth_power{{
    {5, 3, 3, 1, 1, 1, 1, 1},
    {3, 3, 1, 3, 1, 1, 3, 1},
    {1, 1, 3, 1, 3, 3, 1, 3},
    {1, 1, 1, 5, 1, 3, 3, 1},
    {1, 3, 3, 1, 5, 1, 1, 1},
    {3, 1, 3, 3, 1, 3, 1, 1},
    {1, 3, 1, 1, 3, 1, 3, 3},
    {1, 1, 1, 1, 1, 3, 3, 5},
}};

const std::array<std::string_view, 8> gplus2_order{
    "0|00", "1|00", "1|01", "0|01", "0|10", "1|10", "1|11", "0|11",
};

const std::array<int, 6> spectrum_class_sizes{9, 6, 5, 4, 2, 1};

const std::string_view fig7_base = "base 4\n"
                                   "e 0 3 Rot(3)\n"
                                   "uloop 1 Ref(1)\n"
                                   "uloop 2 Ref(4)\n"
                                   "a 0 1 Rot(8)\n"
                                   "a 1 2 Ref(2)\n"
                                   "a 2 3 Ref(0)\n"
                                   "dloop 3 Rot(4)\n";

const std::string_view fig8_shape = "base 4\n"
                                    "a 0 1\n"
                                    "a 1 2\n"
                                    "a 2 3\n"
                                    "a 3 0\n"
                                    "e 0 1\n"
                                    "e 2 3\n";

} // namespace mixedmoore::reference
