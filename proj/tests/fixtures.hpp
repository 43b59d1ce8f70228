#pragma once

// curves and values frozen from PARI/GP (hyperellcharpoly, ellap, ellglobalred)

#include <tuple>
#include <utility>
#include <vector>

#include "glue/models/curves.hpp"

namespace fixtures {

using glue::EllipticCurve;
using glue::GenusTwoCurve;
using glue::IntPoly;
using glue::Integer;

inline IntPoly ip(std::vector<long> c) {
    std::vector<Integer> v(c.begin(), c.end());
    return IntPoly(v);
}

inline GenusTwoCurve curve_277() { return GenusTwoCurve("277.a.277.1", ip({0, -1, -1, 0, 0, 0, 0}), ip({1, 1, 1, 1}), 277); }
inline GenusTwoCurve curve_353() { return GenusTwoCurve("353.a.353.1", ip({0, 0, 1}), ip({1, 1, 0, 1}), 353); }
inline GenusTwoCurve curve_349() { return GenusTwoCurve("349.a.349.1", ip({0, 0, -1, -1}), ip({1, 1, 1, 1}), 349); }
inline GenusTwoCurve curve_169() { return GenusTwoCurve("169.a.169.1", ip({0, 0, 0, 0, 1, 1}), ip({1, 1, 0, 1}), 169); }
inline GenusTwoCurve curve_961() { return GenusTwoCurve("961.a.961.1", ip({-1, -1, 0, 1, 1, 1}), ip({1, 1, 0, 1}), 961); }

inline std::vector<GenusTwoCurve> small_curves() {
    return {
        GenusTwoCurve("small0", ip({1, 0, 0, 0, 0, 1}), ip({}), 625),
        GenusTwoCurve("small1", ip({0, 1, 0, 1, 0, 0, 1}), ip({}), 3233),
        GenusTwoCurve("small2", ip({1, 2, 0, 1, 0, 1}), ip({1}), 6081957),
        GenusTwoCurve("small3", ip({0, 0, 1, 1, 1}), ip({1, 1, 0, 1}), 2505),
        GenusTwoCurve("small4", ip({-1, 0, 0, 1, 0, 1}), ip({0, 1}), 1080757),
        GenusTwoCurve("small5", ip({1, 1, 1, 1, 1, 1, 1}), ip({}), 2401),
        GenusTwoCurve("small6", ip({0, -1, 0, 0, 1}), ip({1, 0, 0, 1}), 13961),
        GenusTwoCurve("small7", ip({3, 0, -2, 0, 0, 1}), ip({}), 999),
        GenusTwoCurve("small8", ip({1, 0, 1, 0, -1, 0, 1}), ip({0, 0, 1}), 28561),
        GenusTwoCurve("small9", ip({2, -1, 1, 0, 1, 1}), ip({1, 0, 1}), 2257469),
    };
}

// (p, a, a')
using CharpolyTable = std::vector<std::tuple<std::uint64_t, std::int64_t, std::int64_t>>;

inline std::vector<std::pair<GenusTwoCurve, CharpolyTable>> frozen_charpolys() {
    return {
        {curve_277(), {{2, -2, 4}, {3, -1, 1}, {5, -1, -2}, {7, 1, 3}, {11, -2, 4}, {13, 3, 7}, {17, -4, 28}, {19, -1, -22}, {23, 3, 22}, {29, -1, 13}, {31, -10, 68}, {37, 4, 42}, {41, 7, 37}, {43, 4, 36}, {47, -8, 46}, {53, 14, 136}, {59, 1, 43}, {61, 2, 2}, {67, 5, -10}, {71, 0, 58}, {73, -3, 28}, {79, -20, 258}, {83, 2, 58}, {89, 3, -32}, {97, -6, 82}, {101, -15, 118}, {103, 1, -66}, {107, 16, 208}, {109, 1, 198}, {113, 3, 172}, {127, -9, 178}}},
        {curve_353(), {{2, -1, 3}, {3, -2, 4}, {5, 1, 2}, {7, 0, -6}, {11, 2, 1}, {13, -1, -8}, {17, 6, 27}, {19, -6, 35}, {23, -2, 27}, {29, -2, -22}, {31, -4, 54}, {37, 5, 8}, {41, 6, 22}, {43, 2, 75}, {47, 0, 23}, {53, -4, 54}, {59, 12, 142}, {61, -18, 178}, {67, 2, 2}, {71, -6, 92}, {73, 10, 74}, {79, -14, 140}, {83, 4, 145}, {89, -8, 70}, {97, -11, 116}, {101, 1, -90}, {103, 16, 140}, {107, -8, 138}, {109, -6, -57}, {113, 12, 82}, {127, 14, 127}}},
        {curve_349(), {{2, -2, 2}, {3, -1, -1}, {5, -1, 7}, {7, -2, 12}, {11, 1, -6}, {13, 2, 14}, {17, 3, 11}, {19, 0, 2}, {23, -3, 22}, {29, 1, 20}, {31, 1, 45}, {37, 3, 5}, {41, -1, -60}, {43, -4, 54}, {47, 6, 80}, {53, 9, 42}, {59, -10, 78}, {61, 1, -72}, {67, 11, 67}, {71, 0, 80}, {73, 11, 112}, {79, -2, 20}, {83, 2, 90}, {89, 4, 108}, {97, -1, 86}, {101, 8, 0}, {103, -5, -54}, {107, 6, -38}, {109, -13, 156}, {113, -15, 158}, {127, -10, 88}}},
        {curve_169(), {{2, -3, 5}, {3, -2, 1}, {5, 0, -7}, {7, 0, 7}, {11, 0, 11}, {17, 3, -8}, {19, -6, 31}, {23, 6, 13}, {29, -3, -20}, {31, 0, -50}, {37, 15, 112}, {41, -9, 68}, {43, -8, 21}, {47, 0, -82}, {53, -6, 115}, {59, 12, 107}, {61, -1, -60}, {67, 6, 79}, {71, 6, 83}, {73, 0, -143}, {79, 8, 174}, {83, 0, 26}, {89, -12, 137}, {97, 12, 145}, {101, 3, -92}, {103, -20, 306}, {107, -6, -71}, {109, 0, -26}, {113, 15, 112}, {127, 2, -123}}},
        {curve_961(), {{2, 1, 3}, {3, -2, 2}, {5, 2, 11}, {7, -4, 13}, {11, 4, 26}, {13, -2, 22}, {17, 6, 38}, {19, 0, 33}, {23, -2, 2}, {29, 10, 78}, {37, -4, 78}, {41, 14, 131}, {43, -2, 82}, {47, -4, 78}, {53, -12, 122}, {59, 0, 113}, {61, -6, 6}, {67, 16, 198}, {71, 4, 21}, {73, 8, 142}, {79, -10, 138}, {83, -12, 122}, {89, 10, 158}, {97, -14, 163}, {101, -6, 211}, {103, 8, 217}, {107, 16, 273}, {109, -10, 163}, {113, -2, 207}, {127, 16, 298}}},
    };
}

inline std::vector<EllipticCurve> candidates_277() {
    return {
        EllipticCurve("1939.b1", {Integer(0), Integer(0), Integer(1), Integer(-1916), Integer(-32281)}, 1939, Integer("-4655539")),
        EllipticCurve("18559.a1", {Integer(0), Integer(0), Integer(1), Integer(11734), Integer(-21208)}, 18559, Integer("-103593749335003")),
        EllipticCurve("21883.b1", {Integer(0), Integer(0), Integer(1), Integer(-86), Integer(-44420)}, 21883, Integer("-852344622523")),
        EllipticCurve("32963.c1", {Integer(0), Integer(0), Integer(1), Integer(-77866), Integer(8364065)}, 32963, Integer("-6610199637923")),
    };
}

inline std::vector<EllipticCurve> small_elliptic() {
    return {
        EllipticCurve("11a1", {Integer(0), Integer(-1), Integer(1), Integer(-10), Integer(-20)}, 11, Integer("-161051")),
        EllipticCurve("37a1", {Integer(0), Integer(0), Integer(1), Integer(-1), Integer(0)}, 37, Integer("37")),
        EllipticCurve("389a1", {Integer(0), Integer(1), Integer(1), Integer(-2), Integer(0)}, 389, Integer("389")),
        EllipticCurve("5077a1", {Integer(0), Integer(0), Integer(1), Integer(-7), Integer(6)}, 5077, Integer("5077")),
        EllipticCurve("14a1", {Integer(1), Integer(0), Integer(1), Integer(4), Integer(-6)}, 14, Integer("-21952")),
        EllipticCurve("15a1", {Integer(1), Integer(1), Integer(1), Integer(-10), Integer(-10)}, 15, Integer("50625")),
        EllipticCurve("27a1", {Integer(0), Integer(0), Integer(1), Integer(0), Integer(-7)}, 27, Integer("-19683")),
        EllipticCurve("24a1", {Integer(0), Integer(-1), Integer(0), Integer(-4), Integer(4)}, 24, Integer("2304")),
        EllipticCurve("1939a1", {Integer(1), Integer(0), Integer(0), Integer(-97), Integer(-378)}, 1939, Integer("-665077")),
        EllipticCurve("20a1", {Integer(0), Integer(1), Integer(0), Integer(4), Integer(4)}, 20, Integer("-6400")),
        EllipticCurve("496a1", {Integer(0), Integer(0), Integer(0), Integer(1), Integer(1)}, 496, Integer("-496")),
    };
}

using TraceTable = std::vector<std::pair<std::uint64_t, std::int64_t>>;

inline std::vector<std::pair<EllipticCurve, TraceTable>> frozen_elliptic_traces() {
    auto t = candidates_277();
    auto s = small_elliptic();
    return {
        {t[0], {{2, 0}, {3, 0}, {5, 3}, {11, 6}, {13, -6}, {17, 3}, {19, -6}, {23, 4}, {29, 9}, {31, 8}, {37, 6}, {41, -10}, {43, 10}, {47, -6}, {53, -10}, {59, -4}, {61, -5}, {67, 7}, {71, 3}, {73, -2}, {79, 15}, {83, -2}, {89, 8}, {97, 11}, {101, 18}, {103, 12}, {107, 18}, {109, -4}, {113, 9}, {127, -12}, {131, 2}, {137, -12}, {139, 4}, {149, 10}, {151, -16}, {157, -14}, {163, -14}, {167, 7}, {173, -3}, {179, 10}, {181, 17}, {191, 1}, {193, -2}, {197, 2}, {199, -23}, {211, -1}, {223, -9}, {227, 4}, {229, 4}, {233, -12}, {239, -14}, {241, 22}, {251, -12}, {257, -17}, {263, 4}, {269, -30}, {271, 21}, {281, -15}}},
        {t[1], {{2, 0}, {3, 0}, {5, -2}, {7, -2}, {11, -4}, {13, -6}, {17, -7}, {19, -1}, {23, 9}, {29, -1}, {31, 8}, {37, 1}, {41, 0}, {43, -10}, {47, -1}, {53, 0}, {59, 1}, {61, -10}, {71, 8}, {73, 3}, {79, 10}, {83, 8}, {89, 3}, {97, -4}, {101, 18}, {103, -8}, {107, 3}, {109, -14}, {113, -6}, {127, -7}, {131, 12}, {137, 18}, {139, 4}, {149, 15}, {151, -11}, {157, 1}, {163, 21}, {167, -8}, {173, -3}, {179, -10}, {181, -23}, {191, -24}, {193, 13}, {197, 22}, {199, -3}, {211, -16}, {223, 1}, {227, -11}, {229, 4}, {233, 8}, {239, 16}, {241, 17}, {251, -12}, {257, -27}, {263, -16}, {269, 10}, {271, 26}, {281, 0}}},
        {t[2], {{2, 0}, {3, 0}, {5, -2}, {7, -2}, {11, -4}, {13, -1}, {17, 3}, {19, 4}, {23, 4}, {29, -6}, {31, -2}, {37, 6}, {41, 0}, {43, 5}, {47, -6}, {53, -10}, {59, -14}, {61, -5}, {67, -8}, {71, -2}, {73, -2}, {83, 3}, {89, 3}, {97, -14}, {101, -12}, {103, -8}, {107, -17}, {109, 11}, {113, 14}, {127, -7}, {131, -13}, {137, -7}, {139, 4}, {149, 5}, {151, -16}, {157, -4}, {163, -24}, {167, 12}, {173, -3}, {179, 0}, {181, -18}, {191, -24}, {193, -22}, {197, 17}, {199, -13}, {211, 4}, {223, 16}, {227, -1}, {229, 4}, {233, -2}, {239, 6}, {241, -3}, {251, 13}, {257, -12}, {263, 4}, {269, 0}, {271, -29}, {281, 15}}},
        {t[3], {{2, 0}, {3, 0}, {5, -2}, {11, 1}, {13, 4}, {19, 4}, {23, 4}, {29, 4}, {31, -2}, {37, 1}, {41, -5}, {43, 0}, {47, -6}, {53, -10}, {59, -4}, {61, 10}, {67, -3}, {71, -12}, {73, 8}, {79, 0}, {83, -2}, {89, -12}, {97, -14}, {101, -2}, {103, 7}, {107, 3}, {109, -14}, {113, -6}, {127, -2}, {131, 17}, {137, 18}, {139, 14}, {149, 10}, {151, -6}, {157, -4}, {163, 1}, {167, 12}, {173, 12}, {179, 10}, {181, 2}, {191, -24}, {193, -2}, {197, -13}, {199, -8}, {211, -6}, {223, -24}, {227, 24}, {229, 4}, {233, 18}, {239, 6}, {241, 22}, {251, 28}, {257, 18}, {263, 4}, {269, -20}, {271, -19}, {281, 15}}},
        {s[0], {{2, -2}, {3, -1}, {5, 1}, {7, -2}, {13, 4}, {17, -2}, {19, 0}, {23, -1}, {29, 0}, {31, 7}, {37, 3}, {41, -8}, {43, -6}, {47, 8}, {53, -6}, {59, 5}, {61, 12}, {67, -7}, {71, -3}, {73, 4}, {79, -10}, {83, -6}, {89, 15}, {97, -7}, {101, 2}, {103, -16}, {107, 18}, {109, 10}, {113, 9}, {127, 8}, {131, -18}, {137, -7}, {139, 10}, {149, -10}, {151, 2}, {157, -7}, {163, 4}, {167, -12}, {173, -6}, {179, -15}, {181, 7}, {191, 17}, {193, 4}, {197, -2}, {199, 0}, {211, 12}, {223, 19}, {227, 18}, {229, 15}, {233, 24}, {239, -30}, {241, -8}, {251, -23}, {257, -2}, {263, 14}, {269, 10}, {271, -28}, {277, -2}, {281, -18}}},
        {s[1], {{2, -2}, {3, -3}, {5, -2}, {7, -1}, {11, -5}, {13, -2}, {17, 0}, {19, 0}, {23, 2}, {29, 6}, {31, -4}, {41, -9}, {43, 2}, {47, -9}, {53, 1}, {59, 8}, {61, -8}, {67, 8}, {71, 9}, {73, -1}, {79, 4}, {83, -15}, {89, 4}, {97, 4}, {101, 3}, {103, 18}, {107, -12}, {109, -16}, {113, -18}, {127, 1}, {131, -12}, {137, -6}, {139, 4}, {149, -5}, {151, 16}, {157, 23}, {163, -18}, {167, -12}, {173, 9}, {179, 18}, {181, 5}, {191, -4}, {193, -26}, {197, 3}, {199, 2}, {211, -13}, {223, -17}, {227, -16}, {229, 7}, {233, 6}, {239, -6}, {241, 14}, {251, -2}, {257, 0}, {263, 19}, {269, -6}, {271, -31}, {277, 12}, {281, 12}}},
        {s[2], {{2, -2}, {3, -2}, {5, -3}, {7, -5}, {11, -4}, {13, -3}, {17, -6}, {19, 5}, {23, -4}, {29, -6}, {31, 4}, {37, -8}, {41, -3}, {43, 12}, {47, -2}, {53, -6}, {59, 3}, {61, -8}, {67, -5}, {71, -10}, {73, -7}, {79, -13}, {83, -12}, {89, -8}, {97, -9}, {101, -4}, {103, -6}, {107, 0}, {109, 2}, {113, 9}, {127, 11}, {131, 2}, {137, -2}, {139, 16}, {149, 10}, {151, -10}, {157, -6}, {163, -20}, {167, 8}, {173, 15}, {179, -19}, {181, 15}, {191, -4}, {193, -18}, {197, 8}, {199, -2}, {211, 7}, {223, -5}, {227, 12}, {229, -8}, {233, -6}, {239, 5}, {241, -30}, {251, 22}, {257, 8}, {263, -24}, {269, 3}, {271, -8}, {277, 17}, {281, -12}}},
        {s[3], {{2, -2}, {3, -3}, {5, -4}, {7, -4}, {11, -6}, {13, -4}, {17, -4}, {19, -7}, {23, -6}, {29, -6}, {31, -2}, {37, 0}, {41, 0}, {43, -8}, {47, -9}, {53, -9}, {59, -11}, {61, -2}, {67, -12}, {71, -8}, {73, -14}, {79, 9}, {83, -2}, {89, 11}, {97, 6}, {101, 4}, {103, 0}, {107, 12}, {109, 7}, {113, -5}, {127, 7}, {131, -7}, {137, -3}, {139, 4}, {149, 6}, {151, 9}, {157, 4}, {163, -4}, {167, -8}, {173, -9}, {179, 9}, {181, 19}, {191, -16}, {193, -13}, {197, -20}, {199, -13}, {211, -12}, {223, 21}, {227, -26}, {229, -10}, {233, 15}, {239, -15}, {241, -29}, {251, 8}, {257, -18}, {263, 2}, {269, -14}, {271, 18}, {277, -13}, {281, 24}}},
        {s[4], {{3, -2}, {5, 0}, {11, 0}, {13, -4}, {17, 6}, {19, 2}, {23, 0}, {29, -6}, {31, -4}, {37, 2}, {41, 6}, {43, 8}, {47, -12}, {53, 6}, {59, -6}, {61, 8}, {67, -4}, {71, 0}, {73, 2}, {79, 8}, {83, -6}, {89, -6}, {97, -10}, {101, 0}, {103, -4}, {107, 12}, {109, 2}, {113, 6}, {127, -16}, {131, 18}, {137, 18}, {139, 14}, {149, -18}, {151, 8}, {157, -4}, {163, -16}, {167, -12}, {173, -12}, {179, -12}, {181, 20}, {191, 24}, {193, 14}, {197, -18}, {199, 20}, {211, -4}, {223, 8}, {227, 18}, {229, -4}, {233, -6}, {239, 24}, {241, -10}, {251, -18}, {257, 18}, {263, 0}, {269, -12}, {271, -16}, {277, -10}, {281, -6}}},
        {s[5], {{2, -1}, {7, 0}, {11, -4}, {13, -2}, {17, 2}, {19, 4}, {23, 0}, {29, -2}, {31, 0}, {37, -10}, {41, 10}, {43, 4}, {47, 8}, {53, -10}, {59, -4}, {61, -2}, {67, 12}, {71, -8}, {73, 10}, {79, 0}, {83, 12}, {89, -6}, {97, 2}, {101, 6}, {103, -16}, {107, -12}, {109, 14}, {113, 2}, {127, -8}, {131, -12}, {137, -6}, {139, -4}, {149, 22}, {151, -8}, {157, 14}, {163, -4}, {167, 0}, {173, -18}, {179, 20}, {181, -10}, {191, 16}, {193, 2}, {197, 6}, {199, -8}, {211, 20}, {223, 8}, {227, -20}, {229, 6}, {233, -6}, {239, -16}, {241, -14}, {251, 12}, {257, 18}, {263, 16}, {269, 14}, {271, 16}, {277, 6}, {281, -6}}},
        {s[6], {{2, 0}, {5, 0}, {7, -1}, {11, 0}, {13, 5}, {17, 0}, {19, -7}, {23, 0}, {29, 0}, {31, -4}, {37, 11}, {41, 0}, {43, 8}, {47, 0}, {53, 0}, {59, 0}, {61, -1}, {67, 5}, {71, 0}, {73, -7}, {79, 17}, {83, 0}, {89, 0}, {97, -19}, {101, 0}, {103, -13}, {107, 0}, {109, 2}, {113, 0}, {127, 20}, {131, 0}, {137, 0}, {139, 23}, {149, 0}, {151, -19}, {157, 14}, {163, -25}, {167, 0}, {173, 0}, {179, 0}, {181, -7}, {191, 0}, {193, 23}, {197, 0}, {199, 11}, {211, -13}, {223, -28}, {227, 0}, {229, -22}, {233, 0}, {239, 0}, {241, 17}, {251, 0}, {257, 0}, {263, 0}, {269, 0}, {271, 29}, {277, 26}, {281, 0}}},
        {s[7], {{5, -2}, {7, 0}, {11, 4}, {13, -2}, {17, 2}, {19, -4}, {23, -8}, {29, 6}, {31, 8}, {37, 6}, {41, -6}, {43, 4}, {47, 0}, {53, -2}, {59, 4}, {61, -2}, {67, -4}, {71, 8}, {73, 10}, {79, -8}, {83, -4}, {89, -6}, {97, 2}, {101, -18}, {103, 16}, {107, -12}, {109, -2}, {113, 18}, {127, -8}, {131, -4}, {137, -6}, {139, -12}, {149, 14}, {151, -16}, {157, -2}, {163, 12}, {167, 24}, {173, 6}, {179, 12}, {181, 6}, {191, 0}, {193, 2}, {197, -18}, {199, 16}, {211, -20}, {223, -8}, {227, 12}, {229, 22}, {233, 10}, {239, -16}, {241, 18}, {251, 20}, {257, 2}, {263, -8}, {269, -10}, {271, 8}, {277, -26}, {281, 26}}},
        {s[8], {{2, -1}, {3, -2}, {5, 2}, {11, 3}, {13, -1}, {17, -6}, {19, -6}, {23, 8}, {29, 5}, {31, -5}, {37, 8}, {41, 3}, {43, -3}, {47, -2}, {53, 6}, {59, 12}, {61, -14}, {67, -8}, {71, 10}, {73, -4}, {79, 4}, {83, 4}, {89, -3}, {97, -12}, {101, -12}, {103, -11}, {107, 3}, {109, -16}, {113, -3}, {127, -7}, {131, 12}, {137, -8}, {139, -16}, {149, -12}, {151, 0}, {157, 19}, {163, 12}, {167, 3}, {173, 22}, {179, -4}, {181, 10}, {191, -10}, {193, -21}, {197, -12}, {199, -16}, {211, -14}, {223, 24}, {227, -23}, {229, 5}, {233, -6}, {239, -25}, {241, -29}, {251, -24}, {257, -18}, {263, 23}, {269, 12}, {271, -7}, {281, -26}}},
        {s[9], {{3, -2}, {7, 2}, {11, 0}, {13, 2}, {17, -6}, {19, -4}, {23, 6}, {29, 6}, {31, -4}, {37, 2}, {41, 6}, {43, -10}, {47, -6}, {53, -6}, {59, 12}, {61, 2}, {67, 2}, {71, -12}, {73, 2}, {79, 8}, {83, 6}, {89, -6}, {97, 2}, {101, 6}, {103, 14}, {107, -6}, {109, 2}, {113, -6}, {127, 2}, {131, 0}, {137, 18}, {139, -4}, {149, -6}, {151, 20}, {157, -22}, {163, -10}, {167, 18}, {173, -6}, {179, -12}, {181, -10}, {191, -12}, {193, 26}, {197, 18}, {199, 8}, {211, -16}, {223, -10}, {227, -6}, {229, 14}, {233, -6}, {239, -24}, {241, 14}, {251, 0}, {257, -6}, {263, -18}, {269, 18}, {271, 20}, {277, 26}, {281, 6}}},
        {s[10], {{3, 0}, {5, -3}, {7, 3}, {11, -2}, {13, -4}, {17, 0}, {19, -1}, {23, -4}, {29, -6}, {37, -10}, {41, 7}, {43, 10}, {47, -12}, {53, -4}, {59, -3}, {61, 12}, {67, 12}, {71, 13}, {73, 2}, {79, -6}, {83, -6}, {89, -10}, {97, 1}, {101, -3}, {103, 17}, {107, 3}, {109, -13}, {113, -11}, {127, 2}, {131, 4}, {137, 12}, {139, 14}, {149, 14}, {151, -2}, {157, -13}, {163, -25}, {167, 24}, {173, 2}, {179, 0}, {181, -8}, {191, -25}, {193, -7}, {197, -24}, {199, -18}, {211, -11}, {223, -20}, {227, 0}, {229, -2}, {233, -3}, {239, -22}, {241, 22}, {251, -30}, {257, 9}, {263, 4}, {269, -24}, {271, -2}, {277, 22}, {281, -7}}},
    };
}

inline std::vector<std::pair<EllipticCurve, TraceTable>> frozen_bad_traces() {
    auto t = candidates_277();
    auto s = small_elliptic();
    return {
        {t[0], {{7, 1}, {277, -1}}},
        {t[1], {{67, -1}, {277, -1}}},
        {t[2], {{79, 1}, {277, -1}}},
        {t[3], {{7, 1}, {17, 1}, {277, -1}}},
        {s[0], {{11, 1}}},
        {s[1], {{37, -1}}},
        {s[2], {}},
        {s[3], {}},
        {s[4], {{2, -1}, {7, 1}}},
        {s[5], {{3, -1}, {5, 1}}},
        {s[6], {{3, 0}}},
        {s[7], {{2, 0}, {3, -1}}},
        {s[8], {{7, -1}, {277, -1}}},
        {s[9], {{2, 0}, {5, -1}}},
        {s[10], {{2, 0}, {31, -1}}},
    };
}

}  // namespace fixtures
