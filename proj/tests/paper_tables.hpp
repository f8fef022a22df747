// Frozen reference data for the regression suites.
//
// Cells marked "erratum" diverge from the printed source rows; each such cell
// is arithmetically or geometrically impossible as printed (the counts must be
// m*S with m in {1,2,4} per congruence class, and the minimizing triangles are
// pinned by exhaustive enumeration).  The verified value is frozen here and
// the printed one kept in a comment.
#pragma once

#include <cstdint>
#include <vector>

namespace paper {

// Gaussian numbers up to 300 (sums of two squares; the independent definition
// pins rows the reproduced source listing garbled in transmission).
inline const std::vector<std::int64_t> kGaussians300 = {
    1,   2,   4,   5,   8,   9,   10,  13,  16,  17,  18,  20,  25,  26,  29,  32,  34,  36,
    37,  40,  41,  45,  49,  50,  52,  53,  58,  61,  64,  65,  68,  72,  73,  74,  80,  81,
    82,  85,  89,  90,  97,  98,  100, 101, 104, 106, 109, 113, 116, 117, 121, 122, 125, 128,
    130, 136, 137, 144, 145, 146, 148, 149, 153, 157, 160, 162, 164, 169, 170, 173, 178, 180,
    181, 185, 193, 194, 196, 197, 200, 202, 205, 208, 212, 218, 221, 225, 226, 229, 232, 233,
    234, 241, 242, 244, 245, 250, 256, 257, 260, 261, 265, 269, 272, 274, 277, 281, 288, 289,
    290, 292, 293, 296, 298};

struct ClassARow {
    std::int64_t d2;
    std::int64_t s;
    char iso;  // 'I' isosceles, 'N' non-isosceles
    std::int64_t egm;
};

// Class A rows with d2 < 337.
inline const std::vector<ClassARow> kTable3 = {
    {1, 1, 'I', 1},       {2, 2, 'I', 2},       {5, 5, 'I', 10},      {10, 10, 'I', 20},
    {13, 12, 'I', 24},    {17, 15, 'I', 30},    {25, 23, 'N', 92},    {26, 24, 'I', 48},
    {34, 30, 'I', 60},    {37, 34, 'N', 136},   {40, 38, 'N', 152},   {41, 39, 'N', 156},
    {50, 45, 'I', 90},    {52, 48, 'I', 96},
    {53, 52, 'N', 208},   // erratum: printed 204; 204 is not m*52 for m in {1,2,4}
    {58, 53, 'N', 212},   {64, 56, 'I', 112},   {68, 60, 'I', 120},   {74, 68, 'N', 272},
    {85, 75, 'I', 150},   {89, 80, 'I', 160},   {97, 86, 'N', 344},   {100, 90, 'I', 180},
    {109, 101, 'N', 404}, {113, 102, 'N', 408}, {117, 105, 'N', 420}, {128, 112, 'I', 224},
    {136, 120, 'I', 240}, {137, 124, 'N', 496}, {145, 127, 'N', 508}, {148, 134, 'N', 536},
    {153, 135, 'I', 270}, {164, 146, 'N', 584}, {170, 150, 'I', 300},
    {178, 157, 'N', 628},  // erratum: printed 627; 627 is not m*157
    {180, 162, 'N', 648}, {181, 166, 'N', 664}, {193, 168, 'I', 336}, {194, 172, 'N', 688},
    {197, 176, 'N', 704}, {200, 180, 'I', 360}, {202, 181, 'N', 724}, {205, 184, 'N', 736},
    {208, 188, 'N', 752}, {212, 194, 'N', 776}, {221, 195, 'I', 390}, {225, 198, 'N', 792},
    {226, 203, 'N', 812}, {233, 208, 'I', 416}, {241, 209, 'I', 418},
    {245, 217, 'N', 868},  // erratum: printed I/434; the unique area-217 minimizer with
                           // sides >= 245 is [245|250|257], scalene (no isosceles
                           // area-217 triangle with sides >= 245 exists)
    {256, 224, 'I', 448}, {260, 228, 'N', 912}, {265, 236, 'N', 944}, {272, 240, 'I', 480},
    {277, 247, 'N', 988}, {290, 254, 'N', 1016}, {293, 258, 'N', 1032}, {296, 268, 'N', 1072},
    {305, 269, 'N', 1076}, {306, 270, 'I', 540}, {320, 280, 'I', 560}, {328, 292, 'N', 1168},
    {333, 299, 'I', 598}};

struct ClassBRow {
    std::int64_t d2;
    std::int64_t s;
    const char* label;  // "B0" or "B1"
    std::int64_t pgs;
};

// Class B rows with d2 <= 4709.
inline const std::vector<ClassBRow> kTable4 = {
    {65, 60, "B1", 240},      {130, 120, "B1", 480},    {324, 288, "B1", 1728},
    {425, 375, "B0", 1500},   {485, 430, "B0", 3440},   {562, 493, "B1", 2598},
    {725, 635, "B0", 5080},   {832, 728, "B1", 5824},   {986, 870, "B1", 5220},
    {1010, 889, "B1", 7112},  {1124, 986, "B1", 5916},  {1234, 1075, "B1", 6450},
    {1297, 1135, "B1", 9080}, {1409, 1236, "B1", 9888}, {1489, 1307, "B1", 10456},
    {1521, 1329, "B1", 10632},  // erratum: printed 10456 (copy of the previous row);
                                // both minimizing classes are scalene, so 8*1329
    {1600, 1400, "B0", 5600}, {1845, 1605, "B0", 12840}, {2098, 1837, "B1", 14696},
    {2116, 1840, "B1", 11040},  // erratum: printed 14720; [2116|2129|2129] is isosceles
                                // (impl (46,0),(23,40)), so 2S + 4S = 6S
    {2213, 1930, "B1", 15440}, {2245, 1960, "B0", 15680},
    {2468, 2150, "B1", 12900},  // erratum: printed 17200; [2474|2474|2500] is isosceles
                                // (impl (43,25),(0,50)), so 6S
    {2578, 2247, "B1", 17976}, {2609, 2277, "B1", 18216}, {2650, 2315, "B0", 18520},
    {2725, 2370, "B0", 18960}, {2770, 2419, "B1", 19352}, {2993, 2613, "B1", 15678},
    {3041, 2654, "B1", 21232}, {3060, 2670, "B0", 21360}, {3130, 2717, "B1", 16302},
    {3413, 2971, "B1", 23768}, {3505, 3061, "B1", 24488}, {3690, 3210, "B0", 25680},
    {3701, 3225, "B1", 19350}, {3770, 3285, "B0", 26280}, {3816, 3318, "B1", 26544},
    {3865, 3359, "B1", 26872}, {4100, 3572, "B1", 28576}, {4210, 3673, "B1", 29384},
    {4232, 3680, "B1", 22080},  // erratum: printed 29440; [4232|4258|4258] is isosceles
                                // (impl (46,46),(-17,63)), so 6S
    {4250, 3695, "B0", 29560}, {4426, 3860, "B1", 30880}, {4441, 3875, "B1", 31000},
    {4505, 3919, "B1", 31352}, {4624, 4012, "B1", 24072}, {4709, 4102, "B1", 32816}};

struct SlidingRef {
    std::int64_t d2;
    std::int64_t s;
    int apex_count;
    std::int64_t w_norm;                    // squared base length
    std::vector<std::int64_t> apex_norms;   // sorted squared apex distances from the
                                            // base vertex at the origin
};

// The 39 sliding instances.  Apex lists are pinned through rotation-invariant
// norms; three source rows carry coordinate-level misprints, corrected here
// from the admissibility constraints:
//  - 72: only the apexes with both slanted sides >= 72 remain (2, not 6);
//  - 22786: printed as 22784 = 128^2+80^2, but the printed apexes and area
//    pin the instance at 131^2+75^2 = 22786;
//  - 29896: printed as 29890, pinned analogously at 150^2+86^2 = 29896.
inline const std::vector<SlidingRef> kTable2 = {
    {4, 4, 3, 4, {4, 5, 8}},
    {8, 8, 3, 8, {8, 10, 16}},
    {9, 9, 4, 9, {9, 10, 13, 18}},
    {18, 18, 4, 18, {18, 20, 26, 36}},
    {20, 20, 3, 20, {20, 25, 40}},
    {29, 28, 2, 32, {29, 37}},
    {45, 42, 2, 49, {45, 52}},
    {72, 66, 2, 72, {73, 85}},
    {80, 72, 2, 81, {80, 89}},
    {90, 84, 2, 98, {90, 104}},
    {106, 99, 2, 121, {106, 117}},
    {121, 110, 2, 121, {125, 136}},
    {157, 143, 2, 169, {157, 170}},
    {160, 144, 2, 162, {160, 178}},
    {218, 195, 2, 225, {218, 233}},
    {281, 252, 2, 288, {281, 305}},
    {392, 350, 2, 392, {397, 425}},
    {521, 460, 2, 529, {521, 544}},
    {698, 621, 2, 729, {698, 725}},
    {821, 725, 2, 841, {821, 850}},
    {1042, 920, 2, 1058, {1042, 1088}},
    {1325, 1170, 2, 1352, {1325, 1377}},
    {1348, 1184, 2, 1369, {1348, 1385}},
    {1517, 1326, 2, 1521, {1517, 1556}},
    {1565, 1372, 2, 1568, {1565, 1621}},
    {2005, 1755, 2, 2025, {2005, 2050}},
    {2792, 2438, 2, 2809, {2792, 2845}},
    {3034, 2652, 2, 3042, {3034, 3112}},
    {3709, 3233, 2, 3721, {3709, 3770}},
    {4453, 3886, 2, 4489, {4453, 4520}},
    {4756, 4140, 2, 4761, {4756, 4825}},
    {6865, 5976, 2, 6889, {6865, 6948}},
    {11449, 9951, 2, 11449, {11458, 11565}},
    {12740, 11074, 2, 12769, {12740, 12853}},
    {13225, 11500, 2, 13225, {13249, 13364}},
    {15488, 13464, 2, 15488, {15489, 15665}},
    {22786, 19781, 2, 22801, {22786, 22937}},
    {29896, 25950, 2, 29929, {29896, 30069}},
    {37970, 32955, 2, 38025, {37970, 38165}}};

}  // namespace paper
