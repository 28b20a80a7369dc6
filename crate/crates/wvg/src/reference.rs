//! Published reference values that the `reproduce` reports are checked
//! against. All values are rounded as printed in their source tables.

/// Three-state example (weights 29, 29, 3). Rows FL, NY, WY and the
/// population-weighted average; columns WTA, PR, popular vote and the
/// equalizing scaled-proportional profile. Exact computations, three
/// decimals.
pub const EXAMPLE1: [[f64; 4]; 4] = [
    [0.250, 0.332, 0.343, 0.271],
    [0.250, 0.332, 0.323, 0.271],
    [0.250, 0.034, 0.008, 0.271],
    [0.250, 0.328, 0.329, 0.271],
];

pub const EXAMPLE1_ROWS: [&str; 4] = ["FL", "NY", "WY", "per capita"];
pub const EXAMPLE1_COLUMNS: [&str; 4] = ["WTA", "PR", "POP", "GP"];

/// Electoral-vote classes of the 2012–2020 apportionment.
pub const EC_CLASSES: [u32; 19] = [
    3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 29, 38, 55,
];

/// Number of states (DC included) in each class.
pub const EC_CLASS_COUNTS: [usize; 19] = [8, 5, 3, 6, 3, 2, 3, 4, 4, 1, 1, 1, 1, 2, 1, 2, 2, 1, 1];

/// Mixed-rule share `a` used in the Electoral College tables.
pub const EC_MIXED_SHARE: f64 = 102.0 / 538.0;

/// District seats per state in the Electoral College tables.
pub const EC_DISTRICT_SEATS: f64 = 2.0;

pub const EC_PAYOFF_COLUMNS: [&str; 4] = ["WTA", "PR", "mixed", "CD"];

/// Simulated per-state payoffs by class (10¹⁰ draws, standard errors about
/// 4×10⁻⁶). Columns as [`EC_PAYOFF_COLUMNS`].
pub const EC_PAYOFFS: [[f64; 4]; 19] = [
    [0.0113, 0.0133, 0.0130, 0.0167],
    [0.0151, 0.0177, 0.0174, 0.0209],
    [0.0189, 0.0221, 0.0217, 0.0251],
    [0.0226, 0.0266, 0.0261, 0.0293],
    [0.0264, 0.0310, 0.0305, 0.0335],
    [0.0302, 0.0354, 0.0348, 0.0377],
    [0.0340, 0.0399, 0.0392, 0.0419],
    [0.0378, 0.0443, 0.0436, 0.0461],
    [0.0416, 0.0488, 0.0479, 0.0503],
    [0.0454, 0.0532, 0.0523, 0.0545],
    [0.0492, 0.0577, 0.0567, 0.0587],
    [0.0531, 0.0622, 0.0611, 0.0630],
    [0.0569, 0.0666, 0.0655, 0.0672],
    [0.0607, 0.0711, 0.0699, 0.0715],
    [0.0684, 0.0801, 0.0788, 0.0800],
    [0.0762, 0.0891, 0.0877, 0.0885],
    [0.1120, 0.1303, 0.1284, 0.1275],
    [0.1494, 0.1729, 0.1706, 0.1677],
    [0.2356, 0.2614, 0.2615, 0.2507],
];

pub const EC_RATIO_COLUMNS: [&str; 4] = ["WTA/PR", "mixed/PR", "CD/PR", "CD/WTA"];

/// Payoff ratios by class. Columns as [`EC_RATIO_COLUMNS`].
pub const EC_RATIOS: [[f64; 4]; 19] = [
    [0.852, 0.982, 1.260, 1.479],
    [0.852, 0.982, 1.182, 1.387],
    [0.852, 0.982, 1.134, 1.331],
    [0.852, 0.982, 1.103, 1.294],
    [0.852, 0.982, 1.080, 1.268],
    [0.852, 0.982, 1.064, 1.248],
    [0.852, 0.982, 1.050, 1.232],
    [0.853, 0.983, 1.040, 1.220],
    [0.853, 0.983, 1.031, 1.210],
    [0.853, 0.983, 1.024, 1.201],
    [0.853, 0.983, 1.018, 1.194],
    [0.853, 0.983, 1.013, 1.187],
    [0.854, 0.983, 1.009, 1.181],
    [0.854, 0.983, 1.005, 1.177],
    [0.854, 0.983, 0.998, 1.168],
    [0.855, 0.983, 0.993, 1.161],
    [0.859, 0.985, 0.978, 1.138],
    [0.864, 0.987, 0.970, 1.122],
    [0.901, 1.000, 0.959, 1.064],
];

/// Tolerances of the reproduction reports.
pub const EXAMPLE1_TOLERANCE: f64 = 1e-3;
pub const EC_PAYOFF_TOLERANCE: f64 = 1e-3;
pub const EC_RATIO_TOLERANCE: f64 = 4e-3;
