//! Published reference values, kept apart from the code that recomputes them.
//! Matrices are stored row by row exactly as printed.

/// Cyclic matrix of `F4` on `w4`: columns are `lambda^k [w4]` for `k = 1..4`.
pub const F4_CYCLIC: &[&[i64]] = &[&[0, 1, 26, 377], &[0, 0, 1, -1], &[0, 1, 0, 52], &[1, 0, 51, -52]];
pub const F4_DET: &str = "351";

pub const E6_CYCLIC: &[&[i64]] = &[
    &[1, 0, 0, 1, -702, -3483],
    &[0, 0, 0, 351, 3834, 17496],
    &[0, 1, 0, -27, -77, -324],
    &[0, 0, 1, 0, -54, -236],
    &[0, 0, 0, 79, 756, 2511],
    &[0, 0, 0, -405, -2759, 2754],
];
pub const E6_DET: &str = "-27208467";

pub const E7_CYCLIC: &[&[i64]] = &[
    &[0, 0, 0, 0, -42504, -834648, -4655288],
    &[0, 0, 0, 0, 8645, 207424, 2129083],
    &[0, 0, 0, 0, 968, 20902, 166704],
    &[0, 0, 0, 1, 0, -267, -2848],
    &[0, 0, 1, 0, -132, -856, -5831],
    &[0, 1, 0, 1, 56, -14742, -179760],
    &[1, 0, 1, 0, -7371, -79648, -560651],
];
pub const E7_DET: &str = "-1997102661696";

pub const E8_CYCLIC: &[&[i64]] = &[
    &[0, 0, 0, 0, 0, -401581533, -48147450080, -2346940420190],
    &[0, 0, 0, 0, 0, 6661497, 860320742, 49370806120],
    &[0, 0, 0, 0, 0, 185628, 22371987, 1105454390],
    &[0, 0, 0, 0, 1, -1, -7999, -514878],
    &[0, 0, 0, 1, 0, -3627, -112746, -2002508],
    &[0, 0, 1, 0, 248, 34255, -9767140, -735062326],
    &[0, 1, 0, 247, -496, -5059262, -205995340, -5451187498],
    &[1, 1, 495, 30380, 2573495, 304455619, 12658360729, 209067977980],
];
pub const E8_DET: &str = "22804152835143344418390";

/// `Spin(10) -> E6` on `V`, columns `a, rho1, rho2, lambda^2 rho1, lambda^2 rho2, lambda^3 rho1`.
pub const E6_RESTRICTION: &[&[i64]] = &[
    &[0, 1, 1, 17, 17, 120],
    &[1, 0, 0, 1, 1, 33],
    &[0, 0, 0, 1, 1, 12],
    &[1, 1, 0, 11, 0, 45],
    &[1, 0, 1, 0, 11, 45],
];

pub const E7_RESTRICTION: &[&[i64]] = &[
    &[0, 34, 220, 25840, 1890, 88, 2],
    &[1, 0, 66, 890, 56, 2, 0],
    &[0, 2, 12, 1320, 34, 0, 0],
    &[0, 0, 1, 145, 24, 1, 0],
    &[2, 12, 200, 9120, 220, 0, 0],
    &[0, 2, 0, 120, 210, 24, 1],
];

pub const E8_RESTRICTION: &[&[i64]] = &[
    &[160, 9056, 597840, 1005303376, 13865488, 125552, 560, 0],
    &[-1, -259, -15473, -49227299, -344942, 4241, 128, 1],
    &[0, 144, 4480, 17099280, 296400, 3168, 16, 0],
    &[1, -3, 1808, -1025376, -23023, -240, -1, 0],
    &[0, 16, 560, 2093696, 22048, 112, 0, 0],
    &[0, -2, -105, -370711, 3367, 121, 1, 0],
    &[16, 816, 58608, 94909584, 920192, 4368, 0, 0],
    &[-1, 15, -5568, -12391764, -22477, 4944, 119, 1],
];

/// Ranks as stated in the text next to each restriction matrix.
pub const E6_RESTRICTION_STATED_RANK: usize = 2;
pub const E7_RESTRICTION_STATED_RANK: usize = 4;
pub const E8_RESTRICTION_STATED_RANK: usize = 4;
/// Dimensions of the kernels of the dual maps.
pub const DUAL_KERNEL_DIMS: [usize; 3] = [1, 2, 4];

pub const TYPE_SPIN10: &[i64] = &[3, 7, 9, 11, 15];
pub const TYPE_E6: &[i64] = &[3, 9, 11, 15, 17, 23];
/// As printed; one entry more than the rank.
pub const TYPE_SPIN12_PRINTED: &[i64] = &[3, 7, 11, 11, 15, 19, 23];
pub const TYPE_E7: &[i64] = &[3, 11, 15, 19, 23, 27, 35];
pub const TYPE_HSPIN16: &[i64] = &[3, 7, 11, 15, 15, 19, 23, 27];
pub const TYPE_E8: &[i64] = &[3, 15, 23, 27, 35, 39, 47, 59];

/// Degrees of the nonzero rational homotopy groups, each of rank one.
pub const HOMOTOPY_R5: &[u32] = &[2, 8, 17, 23];
pub const HOMOTOPY_R6: &[u32] = &[4, 8, 12, 23, 27, 35];
pub const HOMOTOPY_R7: &[u32] = &[8, 12, 16, 20, 35, 39, 47, 59];

/// Poincare polynomials as products `(1 - t^num) / (1 - t^den)`, with Euler characteristic and top degree.
pub struct PublishedProfile {
    pub factors: &'static [(u32, u32)],
    pub euler: u64,
    pub top_degree: usize,
}

pub const PROFILE_R5: PublishedProfile = PublishedProfile { factors: &[(18, 2), (24, 8)], euler: 27, top_degree: 32 };
pub const PROFILE_R6: PublishedProfile =
    PublishedProfile { factors: &[(24, 8), (28, 4), (36, 12)], euler: 63, top_degree: 64 };
pub const PROFILE_R7: PublishedProfile =
    PublishedProfile { factors: &[(36, 12), (40, 8), (48, 16), (60, 20)], euler: 135, top_degree: 128 };

/// Chern character of the positive half-spin representation of `Spin(16)` through degree 16.
pub const CH_DELTA16_PLUS: &str = "128 + 16 p1 + 1/3 p1^2 + 4/3 p2 + 1/360 p1^3 + 1/30 p1 p2 + 2/15 p3 \
    + 1/80640 p1^4 + 1/3360 p1^2 p2 + 1/315 p1 p3 + 1/5040 p2^2 + 17/1260 p4 + 1/2 e";

/// Chern character of `lambda^2 rho16` through degree 16.
pub const CH_LAMBDA2_RHO16: &str = "120 + 14 p1 + 7/6 p1^2 - 4/3 p2 + 7/180 p1^3 - 1/30 p1 p2 - 2/15 p3 \
    + 1/1440 p1^4 - 1/72 p1 p3 + 1/360 p2^2 + 1/45 p4";

/// Degree 16 part of the Chern character of the `E8` adjoint restricted to `Spin(16)`, modulo `p1`.
pub const CH8_E8_MOD_P1: &str = "1/336 p2^2 + 1/28 p4 + 1/2 e";

pub const PHI_E_R7: &str = "-1/168 a8^2 - 1/14 a16";
pub const PHI_P6_R7: &str = "13/1512 a8^3 + 3/14 a8 a16 - 1/20 a12^2";
pub const PHI_P7_R7: &str = "1/168 a8^2 a12 - 1/12 a8 a20 + 1/14 a12 a16";

/// A published relation: the printed text (with generator names as printed) and, where
/// the printed text cannot be a homogeneous relation, the reading we compare against.
pub struct PublishedRelation {
    pub label: &'static str,
    pub degree: u32,
    pub printed: &'static str,
    pub corrections: &'static [(&'static str, &'static str)],
}

pub const R5_RELATIONS: &[PublishedRelation] = &[
    PublishedRelation {
        label: "r18",
        degree: 18,
        printed: "-39936 a2^9 + 1728 a2^5 a8 + a2 a8^2",
        corrections: &[],
    },
    PublishedRelation {
        label: "r24",
        degree: 24,
        printed: "-50429952 a2^12 + 3068928 a2^8 a8 - 11808 a2^4 a8^2 - a8^3",
        corrections: &[],
    },
];

pub const R6_RELATIONS: &[PublishedRelation] = &[
    PublishedRelation {
        label: "r24",
        degree: 24,
        printed: "38367 a4^6 - 131436 a4^4 a8 + 88272 a4^2 a8^2 - 1600 a8^3 - 273024 a4^3 a12 \
            + 55296 a4 a8 a12 - 10368 a12^2",
        corrections: &[],
    },
    PublishedRelation {
        label: "r28",
        degree: 28,
        printed: "63 a4^7 + 96 a4^5 a8 + 48 a4^3 a8^2 + 640 a4 a8^3 - 1686 a4^4 a12 - 4656 a4^2 a8 a12 \
            + 160 a8^2 a12 - 1152 a4 a12^2",
        corrections: &[],
    },
    PublishedRelation {
        label: "r36",
        degree: 36,
        printed: "19503 a4^9 + 41184 a4^7 a8 - 150816 a4^5 a8^2 - 156672 a4^3 a8^3 + 19200 a4 a8^4 \
            - 127224 a4^6 a12 - 908448 a4^4 a8 a12 + 264576 a4^2 a8^2 a12 + 12800 a8^3 a12 \
            - 1806336 a4^3 a8^2 + 36864 a4 a8 a12^2 + 18432 a12^3",
        corrections: &[("a4^3 a8^2", "a4^3 a12^2")],
    },
];

pub const R7_RELATIONS: &[PublishedRelation] = &[
    PublishedRelation {
        label: "r36",
        degree: 36,
        printed: "275 a8^3 a12 - 6150 a8^2 a20 + 5400 a8 a12 a16 - 756 a12^3 - 10800 a16 a20",
        corrections: &[],
    },
    PublishedRelation {
        label: "r40",
        degree: 40,
        printed: "275 a8^5 + 4080 a8^3 a16 + 945 a8^2 a12^2 - 26460 a8 p12 p20 - 25920 a8 a20^2 \
            + 27216 a12^2 a16 + 26460 a20^2",
        corrections: &[("a8 p12 p20", "a8 a12 a20"), ("a8 a20^2", "a8 a16^2")],
    },
    PublishedRelation {
        label: "r48",
        degree: 48,
        printed: "-225875 a8^6 - 8037000 a8^4 a16 + 4233600 a8^3 a12^2 - 23020200 a8^2 a12 a20 \
            - 29160000 a8^2 a16^2 + 28576800 a8 a12^2 a16 - 166698000 a8 a20^2 + 3000564 a12^4 \
            + 57153600 a12 a16 a20 + 46656000 a16^3",
        corrections: &[],
    },
    PublishedRelation {
        label: "r60",
        degree: 60,
        printed: "-2868125 a8^6 a12 + 22312500 a8^5 a20 - 36945000 a8^4 a12 a16 - 3307500 a8^3 a12^3 \
            - 390600000 a8^3 a16 a20 + 222264000 a8^2 a12^2 a20 - 243000000 a8^2 a12 a16^2 \
            + 71442000 a8 a12^3 a16 - 972405000 a8 a12 a20^2 + 1360800000 a8 a16^2 a20 \
            - 18003384 a12^5 + 1000188000 a12^2 a16 a20 - 699840000 a12 a16^3 - 463050000 a20^3",
        corrections: &[],
    },
];
