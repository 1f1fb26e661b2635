//! Published coefficient tables: rows of `(parameter, coefficients)`.

pub const TABLE_3_F_T_G: &[(u32, &[u64])] = &[
    (1, &[1, 1, 1, 2, 5, 16, 61, 271, 1372, 7795, 49093]),
    (2, &[1, 3, 8, 31, 160, 1029, 7910, 70658, 718687]),
    (3, &[1, 7, 42, 329, 3395, 43638, 670663, 11980513]),
    (4, &[1, 15, 190, 3005, 61885, 1587420, 48722721, 1739070735]),
    (5, &[1, 31, 806, 25637, 1054465, 54008696, 3311724885]),
];

pub const TABLE_4_F_T_H: &[(u32, &[u64])] = &[
    (1, &[1, 2, 6, 26, 142, 946, 7446, 67658, 697118, 8031586]),
    (2, &[1, 6, 38, 318, 3406, 44790, 699126, 12630702]),
    (3, &[1, 14, 182, 2982, 62734, 1630174, 50474886, 1813113398]),
    (4, &[1, 30, 790, 25590, 1064590, 54905390, 3382387174]),
    (5, &[1, 62, 3286, 211606, 17496462, 1797007566, 220762565542]),
];

pub const TABLE_5_X5_G: &[(u32, &[u64])] = &[
    (0, &[1, 5, 25, 180, 1725, 20538, 291571, 4801844]),
    (1, &[2, 9, 45, 330, 3195, 38286, 545949, 9020385]),
    (2, &[3, 12, 60, 446, 4350, 52374, 749294, 12410001]),
    (3, &[4, 14, 70, 525, 5145, 62139, 890925, 14779290]),
    (4, &[5, 15, 75, 565, 5550, 67134, 963578, 15997212]),
];

pub const TABLE_6_X5_H: &[(u32, &[u64])] = &[
    (0, &[1, 10, 110, 1650, 32230, 776666, 22237534, 737031746]),
    (1, &[2, 18, 198, 3018, 59598, 1446210, 41605014, 1383694074]),
    (2, &[3, 24, 264, 4072, 81048, 1976760, 57067560, 1902795528]),
    (3, &[4, 28, 308, 4788, 95788, 2344076, 67828068, 2265402148]),
    (4, &[5, 30, 330, 5150, 103290, 2531838, 73345162, 2451727038]),
];

pub const TABLE_7_G_K_G: &[(u32, &[u64])] = &[
    (1, &[1, 1, 3, 11, 50, 280, 1892, 15052, 137957]),
    (2, &[1, 2, 8, 42, 293, 2630, 29054, 380894, 5773064]),
    (3, &[1, 3, 15, 103, 977, 12137, 186601, 3411009, 72158001]),
    (4, &[1, 4, 24, 204, 2454, 39000, 768720, 18028512]),
    (5, &[1, 5, 35, 355, 5180, 100346, 2413318, 69085190]),
];

pub const TABLE_8_G_K_H: &[(u32, &[u64])] = &[
    (1, &[1, 2, 6, 34, 278, 2978, 39302, 615554, 11151446]),
    (2, &[1, 4, 20, 180, 2420, 42916, 940244, 24478804]),
    (3, &[1, 6, 42, 518, 9674, 239302, 7323946, 266553414]),
    (4, &[1, 8, 72, 1128, 26952, 855240, 33608136, 1571210280]),
    (5, &[1, 10, 110, 2090, 60830, 2355562, 113032942, 6454755274]),
];

