//! Example surface and published control points, transcribed verbatim.
//!
//! The triangular tables use their own labels; see `table_label_to_index`.

#![allow(dead_code)]

use blossom_core::{MonomialSurface, Point3, Rational};

pub fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn p3(x: &str, y: &str, z: &str) -> Point3 {
    Point3::new(r(x), r(y), r(z))
}

/// Coefficients `c_ij`, i-major, bidegree (3, 2).
pub const EXAMPLE_COEFFS: [[[&str; 3]; 3]; 4] = [
    [["0", "0", "0"], ["0", "7/5", "-1"], ["0", "3/5", "1/5"]],
    [["3", "0", "3"], ["0", "9/5", "-3"], ["0", "-24/5", "27/5"]],
    [["0", "0", "-15/4"], ["0", "-9/5", "117/10"], ["0", "39/5", "-141/10"]],
    [["1", "0", "19/20"], ["0", "13/5", "-38/5"], ["0", "-23/5", "179/20"]],
];

pub fn example_surface() -> MonomialSurface {
    MonomialSurface::new(
        EXAMPLE_COEFFS
            .iter()
            .map(|row| row.iter().map(|c| p3(c[0], c[1], c[2])).collect())
            .collect(),
    )
    .unwrap()
}

/// `p_{nu,mu}` over [0,1] x [0,1].
pub const S1: [[[&str; 3]; 3]; 4] = [
    [["0", "0", "0"], ["0", "7/10", "-1/2"], ["0", "2", "-4/5"]],
    [["1", "0", "1"], ["1", "1", "0"], ["1", "1", "1"]],
    [["2", "0", "3/4"], ["2", "1", "6/5"], ["2", "2", "3/4"]],
    [["4", "0", "1/5"], ["4", "2", "1/4"], ["4", "3", "3/4"]],
];

/// `p_{nu,mu}` over [1/3,2/3] x [1/4,3/4].
pub const S2: [[[&str; 3]; 3]; 4] = [
    [
        ["28/27", "983/2160", "3637/8640"],
        ["28/27", "385/432", "781/2880"],
        ["28/27", "901/720", "2701/8640"],
    ],
    [
        ["38/27", "527/1080", "613/1080"],
        ["38/27", "205/216", "7/15"],
        ["38/27", "469/360", "571/1080"],
    ],
    [
        ["49/27", "1157/2160", "275/432"],
        ["49/27", "451/432", "431/720"],
        ["49/27", "1039/720", "1399/2160"],
    ],
    [
        ["62/27", "1321/2160", "265/432"],
        ["62/27", "515/432", "449/720"],
        ["62/27", "1187/720", "1469/2160"],
    ],
];

/// `(table nu, table mu, point)` over triangle (0,0), (1,0), (0,1).
pub const S3: [(usize, usize, [&str; 3]); 21] = [
    (0, 5, ["0", "0", "0"]),
    (0, 4, ["3/5", "0", "3/5"]),
    (1, 4, ["0", "7/25", "-1/5"]),
    (0, 3, ["6/5", "0", "33/40"]),
    (1, 3, ["3/5", "37/100", "1/4"]),
    (2, 3, ["0", "31/50", "-19/50"]),
    (0, 2, ["19/10", "0", "77/100"]),
    (1, 2, ["6/5", "2/5", "143/200"]),
    (2, 2, ["3/5", "16/25", "1/10"]),
    (3, 2, ["0", "51/50", "-27/50"]),
    (0, 1, ["14/5", "0", "53/100"]),
    (1, 1, ["19/10", "1/2", "91/100"]),
    (2, 1, ["6/5", "4/5", "103/200"]),
    (3, 1, ["3/5", "81/100", "3/20"]),
    (4, 1, ["0", "37/25", "-17/25"]),
    (0, 0, ["4", "0", "1/5"]),
    (1, 0, ["14/5", "4/5", "11/20"]),
    (2, 0, ["19/10", "9/10", "219/200"]),
    (3, 0, ["6/5", "6/5", "9/40"]),
    (4, 0, ["3/5", "22/25", "2/5"]),
    (5, 0, ["0", "2", "-4/5"]),
];

/// Over triangle (0,1/2), (1/2,0), (1/2,1/2).
pub const S4: [(usize, usize, [&str; 3]); 21] = [
    (0, 5, ["0", "17/20", "-9/20"]),
    (0, 4, ["3/10", "31/50", "-17/200"]),
    (1, 4, ["3/10", "41/50", "-33/200"]),
    (0, 3, ["3/5", "81/160", "303/1600"]),
    (1, 3, ["3/5", "523/800", "43/320"]),
    (2, 3, ["3/5", "653/800", "27/320"]),
    (0, 2, ["73/80", "601/1600", "2963/6400"]),
    (1, 2, ["73/80", "857/1600", "2419/6400"]),
    (2, 2, ["73/80", "221/320", "2051/6400"]),
    (3, 2, ["73/80", "269/320", "1859/6400"]),
    (0, 1, ["5/4", "87/400", "253/400"]),
    (1, 1, ["5/4", "2/5", "3551/6400"]),
    (2, 1, ["5/4", "459/800", "1593/3200"]),
    (3, 1, ["5/4", "591/800", "2953/6400"]),
    (4, 1, ["5/4", "179/200", "713/1600"]),
    (0, 0, ["13/8", "0", "109/160"]),
    (1, 0, ["13/8", "87/400", "503/800"]),
    (2, 0, ["13/8", "679/1600", "3767/6400"]),
    (3, 0, ["13/8", "993/1600", "3589/6400"]),
    (4, 0, ["13/8", "129/160", "349/640"]),
    (5, 0, ["13/8", "157/160", "347/640"]),
];

pub const S3_TRIANGLE: [[&str; 2]; 3] = [["0", "0"], ["1", "0"], ["0", "1"]];
pub const S4_TRIANGLE: [[&str; 2]; 3] = [["0", "1/2"], ["1/2", "0"], ["1/2", "1/2"]];

/// Table label `(nu, mu)` of a degree-`total` triangular table to this
/// crate's `(nu, mu)`: the table point with label `(nu, mu)` has `mu` copies
/// of `a`, `total - nu - mu` copies of `b` and `nu` copies of `c`.
pub fn table_label_to_index(total: usize, nu: usize, mu: usize) -> (usize, usize) {
    (mu, total - nu - mu)
}
