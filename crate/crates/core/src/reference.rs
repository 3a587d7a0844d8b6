//! Reference parameters of the code tables, kept verbatim so that computed
//! tables can be compared against them row by row.

use crate::curve::Orbit;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClRow {
    pub n: u64,
    pub k: u64,
    pub rho: u64,
    pub nu: u64,
    pub d_ord: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImprovedRow {
    pub n: u64,
    pub d: u64,
    pub r_d: u64,
    pub k: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImprovementRow {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    /// `Propagation` for rows derived by the propagation rules; otherwise the
    /// printed code names, whose `C_ℓ` subscripts count from 0.
    pub source: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gf729Row {
    pub k: u64,
    pub d: u64,
    pub orbit: Orbit,
}

pub const GF729_LENGTH: u64 = 6075;

/// Rows of the `C_ℓ` tables whose printed `k` disagrees with `n - ℓ`.
pub const KNOWN_K_MISPRINTS: [(Orbit, u64); 1] = [(Orbit::O1, 8)];

pub fn table_cl(orbit: Orbit) -> &'static [ClRow] {
    match orbit {
        Orbit::O1 => &TABLE_CL_O1,
        Orbit::O2 => &TABLE_CL_O2,
    }
}

pub fn table_improved(orbit: Orbit) -> &'static [ImprovedRow] {
    match orbit {
        Orbit::O1 => &TABLE_IMPROVED_O1,
        Orbit::O2 => &TABLE_IMPROVED_O2,
    }
}

/// `(n, k, ρ_ℓ, ν_ℓ, d_ORD)` as printed, for the codes `C_ℓ` at the O1 base point.
pub const TABLE_CL_O1: [ClRow; 29] = [
    ClRow { n: 224, k: 223, rho: 0, nu: 2, d_ord: 2 },
    ClRow { n: 224, k: 222, rho: 6, nu: 2, d_ord: 2 },
    ClRow { n: 224, k: 222, rho: 8, nu: 2, d_ord: 2 },
    ClRow { n: 224, k: 220, rho: 9, nu: 3, d_ord: 3 },
    ClRow { n: 224, k: 219, rho: 12, nu: 4, d_ord: 3 },
    ClRow { n: 224, k: 218, rho: 14, nu: 4, d_ord: 3 },
    ClRow { n: 224, k: 217, rho: 15, nu: 3, d_ord: 3 },
    ClRow { n: 224, k: 216, rho: 16, nu: 4, d_ord: 4 },
    ClRow { n: 224, k: 215, rho: 17, nu: 5, d_ord: 5 },
    ClRow { n: 224, k: 214, rho: 18, nu: 6, d_ord: 6 },
    ClRow { n: 224, k: 213, rho: 20, nu: 6, d_ord: 6 },
    ClRow { n: 224, k: 212, rho: 21, nu: 6, d_ord: 6 },
    ClRow { n: 224, k: 211, rho: 22, nu: 8, d_ord: 6 },
    ClRow { n: 224, k: 210, rho: 23, nu: 9, d_ord: 6 },
    ClRow { n: 224, k: 209, rho: 24, nu: 6, d_ord: 6 },
    ClRow { n: 224, k: 208, rho: 25, nu: 10, d_ord: 8 },
    ClRow { n: 224, k: 207, rho: 26, nu: 8, d_ord: 8 },
    ClRow { n: 224, k: 206, rho: 27, nu: 9, d_ord: 9 },
    ClRow { n: 224, k: 205, rho: 28, nu: 12, d_ord: 12 },
    ClRow { n: 224, k: 204, rho: 29, nu: 13, d_ord: 12 },
    ClRow { n: 224, k: 203, rho: 30, nu: 12, d_ord: 12 },
    ClRow { n: 224, k: 202, rho: 31, nu: 15, d_ord: 14 },
    ClRow { n: 224, k: 201, rho: 32, nu: 14, d_ord: 14 },
    ClRow { n: 224, k: 200, rho: 33, nu: 15, d_ord: 15 },
    ClRow { n: 224, k: 199, rho: 34, nu: 16, d_ord: 16 },
    ClRow { n: 224, k: 198, rho: 35, nu: 17, d_ord: 17 },
    ClRow { n: 224, k: 197, rho: 36, nu: 18, d_ord: 18 },
    ClRow { n: 224, k: 196, rho: 37, nu: 20, d_ord: 20 },
    ClRow { n: 224, k: 195, rho: 38, nu: 20, d_ord: 20 },
];

/// `(n, k, ρ_ℓ, ν_ℓ, d_ORD)` as printed, for the codes `C_ℓ` at the O2 base point.
pub const TABLE_CL_O2: [ClRow; 29] = [
    ClRow { n: 224, k: 223, rho: 0, nu: 2, d_ord: 2 },
    ClRow { n: 224, k: 222, rho: 7, nu: 2, d_ord: 2 },
    ClRow { n: 224, k: 221, rho: 8, nu: 2, d_ord: 2 },
    ClRow { n: 224, k: 220, rho: 9, nu: 2, d_ord: 2 },
    ClRow { n: 224, k: 219, rho: 13, nu: 3, d_ord: 3 },
    ClRow { n: 224, k: 218, rho: 14, nu: 4, d_ord: 3 },
    ClRow { n: 224, k: 217, rho: 15, nu: 5, d_ord: 3 },
    ClRow { n: 224, k: 216, rho: 16, nu: 4, d_ord: 3 },
    ClRow { n: 224, k: 215, rho: 17, nu: 3, d_ord: 3 },
    ClRow { n: 224, k: 214, rho: 18, nu: 4, d_ord: 4 },
    ClRow { n: 224, k: 213, rho: 20, nu: 6, d_ord: 6 },
    ClRow { n: 224, k: 212, rho: 21, nu: 8, d_ord: 7 },
    ClRow { n: 224, k: 211, rho: 22, nu: 8, d_ord: 7 },
    ClRow { n: 224, k: 210, rho: 23, nu: 8, d_ord: 7 },
    ClRow { n: 224, k: 209, rho: 24, nu: 8, d_ord: 7 },
    ClRow { n: 224, k: 208, rho: 25, nu: 7, d_ord: 7 },
    ClRow { n: 224, k: 207, rho: 26, nu: 8, d_ord: 8 },
    ClRow { n: 224, k: 206, rho: 27, nu: 9, d_ord: 9 },
    ClRow { n: 224, k: 205, rho: 28, nu: 12, d_ord: 12 },
    ClRow { n: 224, k: 204, rho: 29, nu: 13, d_ord: 13 },
    ClRow { n: 224, k: 203, rho: 30, nu: 14, d_ord: 13 },
    ClRow { n: 224, k: 202, rho: 31, nu: 13, d_ord: 13 },
    ClRow { n: 224, k: 201, rho: 32, nu: 14, d_ord: 14 },
    ClRow { n: 224, k: 200, rho: 33, nu: 15, d_ord: 15 },
    ClRow { n: 224, k: 199, rho: 34, nu: 16, d_ord: 16 },
    ClRow { n: 224, k: 198, rho: 35, nu: 17, d_ord: 17 },
    ClRow { n: 224, k: 197, rho: 36, nu: 18, d_ord: 18 },
    ClRow { n: 224, k: 196, rho: 37, nu: 20, d_ord: 20 },
    ClRow { n: 224, k: 195, rho: 38, nu: 20, d_ord: 20 },
];

/// `(n, d, r_d, k)` as printed, for the improved codes at the O1 base point.
pub const TABLE_IMPROVED_O1: [ImprovedRow; 18] = [
    ImprovedRow { n: 224, d: 3, r_d: 4, k: 220 },
    ImprovedRow { n: 224, d: 4, r_d: 6, k: 218 },
    ImprovedRow { n: 224, d: 5, r_d: 9, k: 215 },
    ImprovedRow { n: 224, d: 6, r_d: 10, k: 214 },
    ImprovedRow { n: 224, d: 7, r_d: 14, k: 210 },
    ImprovedRow { n: 224, d: 8, r_d: 14, k: 210 },
    ImprovedRow { n: 224, d: 9, r_d: 16, k: 208 },
    ImprovedRow { n: 224, d: 10, r_d: 18, k: 206 },
    ImprovedRow { n: 224, d: 11, r_d: 19, k: 205 },
    ImprovedRow { n: 224, d: 12, r_d: 19, k: 205 },
    ImprovedRow { n: 224, d: 13, r_d: 21, k: 203 },
    ImprovedRow { n: 224, d: 14, r_d: 22, k: 202 },
    ImprovedRow { n: 224, d: 15, r_d: 23, k: 201 },
    ImprovedRow { n: 224, d: 16, r_d: 25, k: 199 },
    ImprovedRow { n: 224, d: 17, r_d: 26, k: 198 },
    ImprovedRow { n: 224, d: 18, r_d: 27, k: 197 },
    ImprovedRow { n: 224, d: 19, r_d: 28, k: 196 },
    ImprovedRow { n: 224, d: 20, r_d: 28, k: 196 },
];

/// `(n, d, r_d, k)` as printed, for the improved codes at the O2 base point.
pub const TABLE_IMPROVED_O2: [ImprovedRow; 18] = [
    ImprovedRow { n: 224, d: 3, r_d: 5, k: 219 },
    ImprovedRow { n: 224, d: 4, r_d: 7, k: 217 },
    ImprovedRow { n: 224, d: 5, r_d: 10, k: 214 },
    ImprovedRow { n: 224, d: 6, r_d: 11, k: 213 },
    ImprovedRow { n: 224, d: 7, r_d: 12, k: 212 },
    ImprovedRow { n: 224, d: 8, r_d: 13, k: 211 },
    ImprovedRow { n: 224, d: 9, r_d: 18, k: 206 },
    ImprovedRow { n: 224, d: 10, r_d: 19, k: 205 },
    ImprovedRow { n: 224, d: 11, r_d: 19, k: 205 },
    ImprovedRow { n: 224, d: 12, r_d: 19, k: 205 },
    ImprovedRow { n: 224, d: 13, r_d: 20, k: 204 },
    ImprovedRow { n: 224, d: 14, r_d: 22, k: 202 },
    ImprovedRow { n: 224, d: 15, r_d: 24, k: 200 },
    ImprovedRow { n: 224, d: 16, r_d: 25, k: 199 },
    ImprovedRow { n: 224, d: 17, r_d: 26, k: 198 },
    ImprovedRow { n: 224, d: 18, r_d: 27, k: 197 },
    ImprovedRow { n: 224, d: 19, r_d: 28, k: 196 },
    ImprovedRow { n: 224, d: 20, r_d: 28, k: 196 },
];

/// `(n, k, d)` improvements over GF(64) with the printed source label.
pub const TABLE_IMPROVEMENTS: [ImprovementRow; 70] = [
    ImprovementRow { n: 224, k: 204, d: 13, source: "C_19(P_2),C~_13(P_2)" },
    ImprovementRow { n: 223, k: 203, d: 13, source: "Propagation" },
    ImprovementRow { n: 222, k: 202, d: 13, source: "Propagation" },
    ImprovementRow { n: 221, k: 201, d: 13, source: "Propagation" },
    ImprovementRow { n: 220, k: 200, d: 13, source: "Propagation" },
    ImprovementRow { n: 219, k: 199, d: 13, source: "Propagation" },
    ImprovementRow { n: 218, k: 198, d: 13, source: "Propagation" },
    ImprovementRow { n: 217, k: 197, d: 13, source: "Propagation" },
    ImprovementRow { n: 216, k: 196, d: 13, source: "Propagation" },
    ImprovementRow { n: 215, k: 195, d: 13, source: "Propagation" },
    ImprovementRow { n: 214, k: 194, d: 13, source: "Propagation" },
    ImprovementRow { n: 213, k: 193, d: 13, source: "Propagation" },
    ImprovementRow { n: 212, k: 192, d: 13, source: "Propagation" },
    ImprovementRow { n: 211, k: 191, d: 13, source: "Propagation" },
    ImprovementRow { n: 210, k: 190, d: 13, source: "Propagation" },
    ImprovementRow { n: 209, k: 189, d: 13, source: "Propagation" },
    ImprovementRow { n: 208, k: 188, d: 13, source: "Propagation" },
    ImprovementRow { n: 207, k: 187, d: 13, source: "Propagation" },
    ImprovementRow { n: 206, k: 186, d: 13, source: "Propagation" },
    ImprovementRow { n: 205, k: 185, d: 13, source: "Propagation" },
    ImprovementRow { n: 204, k: 184, d: 13, source: "Propagation" },
    ImprovementRow { n: 203, k: 183, d: 13, source: "Propagation" },
    ImprovementRow { n: 202, k: 182, d: 13, source: "Propagation" },
    ImprovementRow { n: 201, k: 181, d: 13, source: "Propagation" },
    ImprovementRow { n: 200, k: 180, d: 13, source: "Propagation" },
    ImprovementRow { n: 224, k: 202, d: 14, source: "C_21(P_1),C~_14(P_i)" },
    ImprovementRow { n: 223, k: 201, d: 14, source: "Propagation" },
    ImprovementRow { n: 222, k: 200, d: 14, source: "Propagation" },
    ImprovementRow { n: 221, k: 199, d: 14, source: "Propagation" },
    ImprovementRow { n: 220, k: 198, d: 14, source: "Propagation" },
    ImprovementRow { n: 219, k: 197, d: 14, source: "Propagation" },
    ImprovementRow { n: 218, k: 196, d: 14, source: "Propagation" },
    ImprovementRow { n: 217, k: 195, d: 14, source: "Propagation" },
    ImprovementRow { n: 216, k: 194, d: 14, source: "Propagation" },
    ImprovementRow { n: 215, k: 193, d: 14, source: "Propagation" },
    ImprovementRow { n: 214, k: 192, d: 14, source: "Propagation" },
    ImprovementRow { n: 213, k: 191, d: 14, source: "Propagation" },
    ImprovementRow { n: 212, k: 190, d: 14, source: "Propagation" },
    ImprovementRow { n: 211, k: 189, d: 14, source: "Propagation" },
    ImprovementRow { n: 210, k: 188, d: 14, source: "Propagation" },
    ImprovementRow { n: 224, k: 201, d: 15, source: "C~_15(P_1)" },
    ImprovementRow { n: 223, k: 200, d: 15, source: "Propagation" },
    ImprovementRow { n: 222, k: 199, d: 15, source: "Propagation" },
    ImprovementRow { n: 221, k: 198, d: 15, source: "Propagation" },
    ImprovementRow { n: 220, k: 197, d: 15, source: "Propagation" },
    ImprovementRow { n: 219, k: 196, d: 15, source: "Propagation" },
    ImprovementRow { n: 218, k: 195, d: 15, source: "Propagation" },
    ImprovementRow { n: 217, k: 194, d: 15, source: "Propagation" },
    ImprovementRow { n: 216, k: 193, d: 15, source: "Propagation" },
    ImprovementRow { n: 215, k: 192, d: 15, source: "Propagation" },
    ImprovementRow { n: 214, k: 191, d: 15, source: "Propagation" },
    ImprovementRow { n: 213, k: 190, d: 15, source: "Propagation" },
    ImprovementRow { n: 212, k: 189, d: 15, source: "Propagation" },
    ImprovementRow { n: 211, k: 188, d: 15, source: "Propagation" },
    ImprovementRow { n: 210, k: 187, d: 15, source: "Propagation" },
    ImprovementRow { n: 224, k: 196, d: 20, source: "C_27(P_i),C~_20(P_i)" },
    ImprovementRow { n: 223, k: 195, d: 20, source: "Propagation" },
    ImprovementRow { n: 222, k: 194, d: 20, source: "Propagation" },
    ImprovementRow { n: 221, k: 193, d: 20, source: "Propagation" },
    ImprovementRow { n: 220, k: 192, d: 20, source: "Propagation" },
    ImprovementRow { n: 219, k: 191, d: 20, source: "Propagation" },
    ImprovementRow { n: 218, k: 190, d: 20, source: "Propagation" },
    ImprovementRow { n: 217, k: 189, d: 20, source: "Propagation" },
    ImprovementRow { n: 216, k: 188, d: 20, source: "Propagation" },
    ImprovementRow { n: 215, k: 187, d: 20, source: "Propagation" },
    ImprovementRow { n: 214, k: 186, d: 20, source: "Propagation" },
    ImprovementRow { n: 213, k: 185, d: 20, source: "Propagation" },
    ImprovementRow { n: 212, k: 184, d: 20, source: "Propagation" },
    ImprovementRow { n: 211, k: 183, d: 20, source: "Propagation" },
    ImprovementRow { n: 210, k: 182, d: 20, source: "Propagation" },
];

/// `(k, d, base orbit)` over GF(729), n = 6075.
pub const TABLE_GF729: [Gf729Row; 161] = [
    Gf729Row { k: 6074, d: 2, orbit: Orbit::O1 },
    Gf729Row { k: 6071, d: 3, orbit: Orbit::O1 },
    Gf729Row { k: 6068, d: 4, orbit: Orbit::O1 },
    Gf729Row { k: 6063, d: 5, orbit: Orbit::O1 },
    Gf729Row { k: 6062, d: 6, orbit: Orbit::O1 },
    Gf729Row { k: 6055, d: 7, orbit: Orbit::O1 },
    Gf729Row { k: 6053, d: 8, orbit: Orbit::O1 },
    Gf729Row { k: 6048, d: 9, orbit: Orbit::O1 },
    Gf729Row { k: 6045, d: 10, orbit: Orbit::O1 },
    Gf729Row { k: 6042, d: 11, orbit: Orbit::O1 },
    Gf729Row { k: 6041, d: 12, orbit: Orbit::O1 },
    Gf729Row { k: 6032, d: 13, orbit: Orbit::O1 },
    Gf729Row { k: 6031, d: 14, orbit: Orbit::O1 },
    Gf729Row { k: 6027, d: 15, orbit: Orbit::O1 },
    Gf729Row { k: 6024, d: 16, orbit: Orbit::O1 },
    Gf729Row { k: 6020, d: 17, orbit: Orbit::O1 },
    Gf729Row { k: 6019, d: 18, orbit: Orbit::O1 },
    Gf729Row { k: 6013, d: 19, orbit: Orbit::O1 },
    Gf729Row { k: 6012, d: 20, orbit: Orbit::O1 },
    Gf729Row { k: 6008, d: 21, orbit: Orbit::O1 },
    Gf729Row { k: 6004, d: 22, orbit: Orbit::O1 },
    Gf729Row { k: 6003, d: 23, orbit: Orbit::O1 },
    Gf729Row { k: 6002, d: 24, orbit: Orbit::O1 },
    Gf729Row { k: 5996, d: 25, orbit: Orbit::O2 },
    Gf729Row { k: 5995, d: 26, orbit: Orbit::O1 },
    Gf729Row { k: 5994, d: 27, orbit: Orbit::O1 },
    Gf729Row { k: 5992, d: 28, orbit: Orbit::O1 },
    Gf729Row { k: 5987, d: 30, orbit: Orbit::O1 },
    Gf729Row { k: 5983, d: 32, orbit: Orbit::O1 },
    Gf729Row { k: 5981, d: 33, orbit: Orbit::O1 },
    Gf729Row { k: 5980, d: 34, orbit: Orbit::O1 },
    Gf729Row { k: 5979, d: 35, orbit: Orbit::O1 },
    Gf729Row { k: 5978, d: 36, orbit: Orbit::O1 },
    Gf729Row { k: 5973, d: 37, orbit: Orbit::O1 },
    Gf729Row { k: 5972, d: 38, orbit: Orbit::O1 },
    Gf729Row { k: 5970, d: 39, orbit: Orbit::O1 },
    Gf729Row { k: 5969, d: 40, orbit: Orbit::O1 },
    Gf729Row { k: 5966, d: 42, orbit: Orbit::O1 },
    Gf729Row { k: 5961, d: 44, orbit: Orbit::O1 },
    Gf729Row { k: 5960, d: 45, orbit: Orbit::O1 },
    Gf729Row { k: 5958, d: 46, orbit: Orbit::O1 },
    Gf729Row { k: 5956, d: 48, orbit: Orbit::O1 },
    Gf729Row { k: 5952, d: 50, orbit: Orbit::O2 },
    Gf729Row { k: 5951, d: 51, orbit: Orbit::O2 },
    Gf729Row { k: 5949, d: 52, orbit: Orbit::O2 },
    Gf729Row { k: 5946, d: 53, orbit: Orbit::O1 },
    Gf729Row { k: 5945, d: 54, orbit: Orbit::O1 },
    Gf729Row { k: 5942, d: 55, orbit: Orbit::O1 },
    Gf729Row { k: 5940, d: 56, orbit: Orbit::O1 },
    Gf729Row { k: 5938, d: 57, orbit: Orbit::O1 },
    Gf729Row { k: 5937, d: 60, orbit: Orbit::O1 },
    Gf729Row { k: 5932, d: 62, orbit: Orbit::O1 },
    Gf729Row { k: 5931, d: 63, orbit: Orbit::O1 },
    Gf729Row { k: 5929, d: 64, orbit: Orbit::O1 },
    Gf729Row { k: 5928, d: 65, orbit: Orbit::O1 },
    Gf729Row { k: 5927, d: 66, orbit: Orbit::O1 },
    Gf729Row { k: 5926, d: 68, orbit: Orbit::O1 },
    Gf729Row { k: 5924, d: 69, orbit: Orbit::O1 },
    Gf729Row { k: 5922, d: 70, orbit: Orbit::O1 },
    Gf729Row { k: 5919, d: 71, orbit: Orbit::O1 },
    Gf729Row { k: 5918, d: 72, orbit: Orbit::O1 },
    Gf729Row { k: 5917, d: 74, orbit: Orbit::O2 },
    Gf729Row { k: 5916, d: 75, orbit: Orbit::O2 },
    Gf729Row { k: 5915, d: 76, orbit: Orbit::O2 },
    Gf729Row { k: 5914, d: 77, orbit: Orbit::O2 },
    Gf729Row { k: 5913, d: 78, orbit: Orbit::O2 },
    Gf729Row { k: 5910, d: 79, orbit: Orbit::O2 },
    Gf729Row { k: 5908, d: 80, orbit: Orbit::O1 },
    Gf729Row { k: 5906, d: 81, orbit: Orbit::O1 },
    Gf729Row { k: 5905, d: 82, orbit: Orbit::O1 },
    Gf729Row { k: 5904, d: 83, orbit: Orbit::O1 },
    Gf729Row { k: 5902, d: 84, orbit: Orbit::O1 },
    Gf729Row { k: 5899, d: 85, orbit: Orbit::O1 },
    Gf729Row { k: 5898, d: 86, orbit: Orbit::O1 },
    Gf729Row { k: 5897, d: 90, orbit: Orbit::O1 },
    Gf729Row { k: 5894, d: 91, orbit: Orbit::O1 },
    Gf729Row { k: 5892, d: 92, orbit: Orbit::O1 },
    Gf729Row { k: 5891, d: 94, orbit: Orbit::O1 },
    Gf729Row { k: 5890, d: 96, orbit: Orbit::O2 },
    Gf729Row { k: 5889, d: 99, orbit: Orbit::O2 },
    Gf729Row { k: 5888, d: 100, orbit: Orbit::O2 },
    Gf729Row { k: 5885, d: 101, orbit: Orbit::O2 },
    Gf729Row { k: 5884, d: 102, orbit: Orbit::O2 },
    Gf729Row { k: 5880, d: 103, orbit: Orbit::O1 },
    Gf729Row { k: 5878, d: 104, orbit: Orbit::O1 },
    Gf729Row { k: 5877, d: 105, orbit: Orbit::O1 },
    Gf729Row { k: 5875, d: 106, orbit: Orbit::O1 },
    Gf729Row { k: 5874, d: 108, orbit: Orbit::O1 },
    Gf729Row { k: 5872, d: 109, orbit: Orbit::O1 },
    Gf729Row { k: 5871, d: 110, orbit: Orbit::O1 },
    Gf729Row { k: 5869, d: 111, orbit: Orbit::O1 },
    Gf729Row { k: 5868, d: 112, orbit: Orbit::O1 },
    Gf729Row { k: 5866, d: 114, orbit: Orbit::O1 },
    Gf729Row { k: 5865, d: 115, orbit: Orbit::O1 },
    Gf729Row { k: 5864, d: 117, orbit: Orbit::O1 },
    Gf729Row { k: 5863, d: 120, orbit: Orbit::O2 },
    Gf729Row { k: 5862, d: 121, orbit: Orbit::O2 },
    Gf729Row { k: 5860, d: 124, orbit: Orbit::O2 },
    Gf729Row { k: 5857, d: 125, orbit: Orbit::O2 },
    Gf729Row { k: 5854, d: 126, orbit: Orbit::O1 },
    Gf729Row { k: 5852, d: 128, orbit: Orbit::O1 },
    Gf729Row { k: 5851, d: 129, orbit: Orbit::O1 },
    Gf729Row { k: 5849, d: 130, orbit: Orbit::O1 },
    Gf729Row { k: 5848, d: 131, orbit: Orbit::O1 },
    Gf729Row { k: 5847, d: 132, orbit: Orbit::O1 },
    Gf729Row { k: 5846, d: 133, orbit: Orbit::O1 },
    Gf729Row { k: 5844, d: 134, orbit: Orbit::O1 },
    Gf729Row { k: 5843, d: 135, orbit: Orbit::O1 },
    Gf729Row { k: 5842, d: 136, orbit: Orbit::O1 },
    Gf729Row { k: 5841, d: 137, orbit: Orbit::O1 },
    Gf729Row { k: 5840, d: 138, orbit: Orbit::O1 },
    Gf729Row { k: 5838, d: 139, orbit: Orbit::O1 },
    Gf729Row { k: 5837, d: 140, orbit: Orbit::O1 },
    Gf729Row { k: 5836, d: 144, orbit: Orbit::O1 },
    Gf729Row { k: 5835, d: 146, orbit: Orbit::O2 },
    Gf729Row { k: 5832, d: 148, orbit: Orbit::O2 },
    Gf729Row { k: 5830, d: 149, orbit: Orbit::O2 },
    Gf729Row { k: 5829, d: 150, orbit: Orbit::O1 },
    Gf729Row { k: 5828, d: 151, orbit: Orbit::O1 },
    Gf729Row { k: 5827, d: 152, orbit: Orbit::O1 },
    Gf729Row { k: 5825, d: 153, orbit: Orbit::O1 },
    Gf729Row { k: 5823, d: 154, orbit: Orbit::O1 },
    Gf729Row { k: 5822, d: 156, orbit: Orbit::O1 },
    Gf729Row { k: 5821, d: 157, orbit: Orbit::O1 },
    Gf729Row { k: 5820, d: 158, orbit: Orbit::O1 },
    Gf729Row { k: 5818, d: 159, orbit: Orbit::O1 },
    Gf729Row { k: 5817, d: 160, orbit: Orbit::O1 },
    Gf729Row { k: 5816, d: 161, orbit: Orbit::O1 },
    Gf729Row { k: 5815, d: 162, orbit: Orbit::O1 },
    Gf729Row { k: 5814, d: 163, orbit: Orbit::O1 },
    Gf729Row { k: 5813, d: 164, orbit: Orbit::O1 },
    Gf729Row { k: 5812, d: 165, orbit: Orbit::O1 },
    Gf729Row { k: 5811, d: 166, orbit: Orbit::O1 },
    Gf729Row { k: 5810, d: 167, orbit: Orbit::O1 },
    Gf729Row { k: 5809, d: 168, orbit: Orbit::O1 },
    Gf729Row { k: 5808, d: 171, orbit: Orbit::O1 },
    Gf729Row { k: 5806, d: 172, orbit: Orbit::O1 },
    Gf729Row { k: 5805, d: 173, orbit: Orbit::O2 },
    Gf729Row { k: 5804, d: 174, orbit: Orbit::O2 },
    Gf729Row { k: 5802, d: 175, orbit: Orbit::O1 },
    Gf729Row { k: 5801, d: 177, orbit: Orbit::O1 },
    Gf729Row { k: 5800, d: 178, orbit: Orbit::O1 },
    Gf729Row { k: 5798, d: 179, orbit: Orbit::O1 },
    Gf729Row { k: 5797, d: 180, orbit: Orbit::O1 },
    Gf729Row { k: 5796, d: 181, orbit: Orbit::O1 },
    Gf729Row { k: 5795, d: 182, orbit: Orbit::O1 },
    Gf729Row { k: 5794, d: 183, orbit: Orbit::O1 },
    Gf729Row { k: 5793, d: 184, orbit: Orbit::O1 },
    Gf729Row { k: 5792, d: 185, orbit: Orbit::O1 },
    Gf729Row { k: 5791, d: 186, orbit: Orbit::O1 },
    Gf729Row { k: 5790, d: 187, orbit: Orbit::O1 },
    Gf729Row { k: 5789, d: 188, orbit: Orbit::O1 },
    Gf729Row { k: 5788, d: 189, orbit: Orbit::O1 },
    Gf729Row { k: 5787, d: 190, orbit: Orbit::O1 },
    Gf729Row { k: 5786, d: 191, orbit: Orbit::O1 },
    Gf729Row { k: 5785, d: 192, orbit: Orbit::O1 },
    Gf729Row { k: 5784, d: 193, orbit: Orbit::O1 },
    Gf729Row { k: 5783, d: 194, orbit: Orbit::O1 },
    Gf729Row { k: 5782, d: 195, orbit: Orbit::O1 },
    Gf729Row { k: 5781, d: 196, orbit: Orbit::O1 },
    Gf729Row { k: 5780, d: 198, orbit: Orbit::O1 },
];
