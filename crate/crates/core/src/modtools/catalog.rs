//! Decomposition bases and the action tables as printed, in block coordinates.
//!
//! `vectors` is the canonical basis used for computation; `printed_vectors`
//! is the basis as displayed. Where they differ the printed form is a
//! detected erratum (see [`errata`]). Table rows list the images of the block
//! basis vectors in order.

use crate::graded::GeneratorId::{self, *};

pub type PrintedTable = &'static [(GeneratorId, &'static [&'static str])];

#[derive(Clone, Debug)]
pub struct BlockSpec {
    pub name: &'static str,
    pub labels: &'static [&'static str],
    pub vectors: &'static [&'static str],
    pub printed_vectors: &'static [&'static str],
    pub printed_table: PrintedTable,
}

pub const LABELS4: &[&str] = &["v", "u", "chi", "sigma"];
pub const LABELS8: &[&str] = &["v1", "v2", "u1", "u2", "chi1", "chi2", "sigma1", "sigma2"];

const DE1_TABLE: PrintedTable = &[
    (Q10, &["E*chi", "0", "0", "E*u"]),
    (Q10d, &["0", "sigma", "v", "0"]),
    (Q01, &["E*sigma", "0", "E*u", "0"]),
    (Q01d, &["0", "chi", "0", "v"]),
    (Z, &["0", "0", "0", "0"]),
];

const DE2_TABLE: PrintedTable = &[
    (Q10, &["0", "sigma", "v", "0"]),
    (Q10d, &["E*chi", "0", "0", "E*u"]),
    (Q01, &["0", "chi", "0", "v"]),
    (Q01d, &["E*sigma", "0", "E*u", "0"]),
    (Z, &["0", "0", "0", "0"]),
];

const DE3_TABLE: PrintedTable = &[
    (Q10, &["0", "sigma", "v", "0"]),
    (Q10d, &["E*chi", "0", "0", "E*u"]),
    (Q01, &["E*sigma", "0", "E*u", "0"]),
    (Q01d, &["0", "chi", "0", "v"]),
    (Z, &["0", "0", "0", "0"]),
];

const DE4_TABLE: PrintedTable = &[
    (Q10, &["E*chi", "0", "0", "E*u"]),
    (Q10d, &["0", "sigma", "v", "0"]),
    (Q01, &["0", "chi", "0", "u"]),
    (Q01d, &["E*sigma", "0", "E*u", "0"]),
    (Z, &["0", "0", "0", "0"]),
];

/// The four blocks of D(E).
pub fn de_blocks() -> Vec<BlockSpec> {
    vec![
        BlockSpec {
            name: "DE.1",
            labels: LABELS4,
            vectors: &["E^2*v1-E*v2-v4", "u1", "2*E*chi1-chi4", "2*E*sigma1-sigma3"],
            printed_vectors: &["E^2*v1-E*v2-v4", "u1", "2*E*chi1-chi4", "2*E*sigma1-sigma3"],
            printed_table: DE1_TABLE,
        },
        BlockSpec {
            name: "DE.2",
            labels: LABELS4,
            vectors: &["E^2*v1+E*v3-v4", "u2", "2*E*chi2-chi3", "2*E*sigma2-sigma4"],
            printed_vectors: &["E^2*v1+E*v3-v4", "u2", "2*E*chi2-chi3", "2*E*sigma2-sigma3"],
            printed_table: DE2_TABLE,
        },
        BlockSpec {
            name: "DE.3",
            labels: LABELS4,
            vectors: &["E*(v2-v3)+v4", "u3", "chi3", "sigma3"],
            printed_vectors: &["E*(v2-v3)+v4", "u3", "chi3", "sigma3"],
            printed_table: DE3_TABLE,
        },
        BlockSpec {
            name: "DE.4",
            labels: LABELS4,
            vectors: &["v4", "u4", "chi4", "sigma4"],
            printed_vectors: &["v4", "u4", "chi4", "sigma4"],
            printed_table: DE4_TABLE,
        },
    ]
}

const DEL1_TABLE: PrintedTable = &[
    (Q10, &["chi1", "0", "sigma2", "0", "0", "v2", "u2", "0"]),
    (
        Q10d,
        &["0", "i*chi1+E*chi2", "0", "E*sigma1+i*lam*sigma2", "E*v1", "-i*v1", "-i*lam*u1", "E*u1"],
    ),
    (Q01, &["sigma1", "0", "chi2", "0", "u2", "0", "0", "v2"]),
    (
        Q01d,
        &["0", "-i*sigma1+E*sigma2", "0", "E*chi1-i*lam*chi2", "i*lam*u1", "E*u1", "E*v1", "i*v1"],
    ),
    (Z, &["lam*u1", "u2", "v1", "lam*v2", "-lam*sigma2", "-sigma1", "-lam*chi2", "-chi1"]),
];

const DEL2_TABLE: PrintedTable = &[
    (Q10, &["-E*chi1", "-i*lam*chi1", "0", "i*sigma1", "0", "v1+i/lam*E*v2", "0", "u1"]),
    (Q10d, &["0", "-i*lam*chi2", "E*sigma2", "sigma2", "-v1", "0", "i*u1-i*E*u1", "0"]),
    (Q01, &["sigma1", "0", "-i*lam*chi1", "0", "0", "-i*u2", "0", "v2"]),
    (
        Q01d,
        &[
            "i/lam*(lam-E^2)*sigma2",
            "E*sigma2",
            "i*lam*chi2",
            "i*E*chi2",
            "i/lam*E*u1-i*u2",
            "0",
            "E*v1-i/lam*(lam-E^2)*v2",
            "0",
        ],
    ),
    (Z, &["-u1+E*u2", "i*lam*u2", "-lam*v1-i*E*v2", "-i*v2", "i*sigma1", "sigma2", "-i*lam*chi1", "lam*chi2"]),
];

const DEL_D1: &[&str] = &[
    "v6",
    "-(lam-2*E^2)/2*v1+E*v3-v4+i/2*(v7-v8)",
    "u2",
    "i*lam/2*(u3-u4)-(lam-2*E^2)/2*u5+E*u7-u8",
    "i*lam*chi2+2*E*chi6-chi8",
    "2*E*chi2-chi3-i*chi6",
    "-i*lam*sigma2+2*E*sigma6-sigma7",
    "2*E*sigma2-sigma4+i*sigma6",
];

const DEL_D2: &[&str] = &[
    "-lam/2*v1+E*v2+v4-i/(2*lam)*(lam-2*E^2)*v7-i/2*v8",
    "i*lam*v3-E*v7",
    "lam/2*(i*u3+i*u4+u5)-E*(u6-u7)-u8",
    "i*E*u3+u7",
    "E*chi1-chi4+i*chi5-i/lam*E*chi7",
    "chi3-i*chi6",
    "-lam*sigma1+E*(sigma3+i*sigma5)-i*sigma8",
    "i*lam*sigma2-sigma7",
];

/// The four blocks of D(E,λ): two copies each of D^(1) and D^(2).
pub fn del_blocks() -> Vec<BlockSpec> {
    vec![
        BlockSpec {
            name: "DEl.D1",
            labels: LABELS8,
            vectors: DEL_D1,
            printed_vectors: DEL_D1,
            printed_table: DEL1_TABLE,
        },
        BlockSpec {
            name: "DEl.D1t",
            labels: LABELS8,
            vectors: &[
                "lam/2*(lam-2*E^2)*v1+lam*E*v2+lam*v4+i/2*lam*(v7-v8)",
                "(lam-E^2)*v5",
                "i/2*lam*(u3-u4)+(lam-2*E^2)/2*u5+E*u6+u8",
                "lam*(lam-E^2)*u1",
                "lam*(lam-2*E^2)*chi1+lam*E*(chi4-i*chi5)+i*lam*chi7",
                "i*lam*E*chi1-i*lam*chi4+(lam-2*E^2)*chi5+E*chi7",
                "lam*(lam-2*E^2)*sigma1+lam*E*(sigma3+i*sigma5)-i*lam*sigma8",
                "-i*lam*E*sigma1+i*lam*sigma3+(lam-2*E^2)*sigma5+E*sigma8",
            ],
            printed_vectors: &[
                "lam/2*(lam-2*E^2)*v1+lam*E*v2+lam*v4+i/2*lam*(v7-v8)",
                "(lam-E^2)*v5",
                "i/2*lam*(u3-u4)+(lam-2*E^2)/2*u5+E*u6+u8",
                "lam*(lam-E^2)*u1",
                "lam*(lam-E^2)*chi1+lam*E*(chi4-i*chi5)+i*lam*chi7",
                "i*(lam-E^2)*(2*E*chi1-chi4-i*chi5)",
                "-E*(lam-2*E^2)*sigma1-E^2*(sigma3-sigma5)-E*sigma8",
                "-i*lam*E*sigma1+i*lam*sigma3+(lam-2*E^2)*sigma5+E*sigma8",
            ],
            printed_table: DEL1_TABLE,
        },
        BlockSpec {
            name: "DEl.D2",
            labels: LABELS8,
            vectors: DEL_D2,
            printed_vectors: &[
                "-lam/2*v1+E*v2+v4-i/lam*(lam-2*E^2)*v7-i/2*v8",
                "i*lam*v3-E*v7",
                "lam/2*(i*u3+i*u4+u5)-E*(u6-u7)-u8",
                "i*E*u3+u7",
                "E*chi1-chi4+i*chi5-i/lam*E*chi7",
                "chi3-i*chi6",
                "-lam*sigma1+E*(sigma3+i*sigma5)-i*sigma8",
                "i*lam*sigma2-sigma7",
            ],
            printed_table: DEL2_TABLE,
        },
        BlockSpec {
            name: "DEl.D2t",
            labels: LABELS8,
            vectors: &[
                "-i*lam*E/2*v1+i*lam*v2+i*E*v4-E/2*v7+E/2*v8",
                "lam^2/2*v1-lam*v4-i*lam/2*v7-i*lam/2*v8",
                "-lam*E*u4-i*lam*u6",
                "-lam/2*(u3+u4+i*u5)+i*u8",
                "i*lam*chi1-i*E*chi4-E*chi5+chi7",
                "i*lam*chi2+chi8",
                "-i*lam*E*sigma1+i*lam*sigma3-lam*sigma5+E*sigma8",
                "-lam*sigma4-i*lam*sigma6",
            ],
            printed_vectors: &[
                "-i*lam/2*E*v1+i*lam*v2+i*E*v4-E/2*v7+(1-E/2+E^2/lam-E^3/lam)*v8",
                "lam^2/2*v1-lam*v4-i/2*v7-i*(lam/2-E+E^2)*v8",
                "-lam*E*u4-i*lam*u6",
                "-lam/2*(u3+u4+i*u5)+i*u8",
                "i*lam*chi1-i*E*chi4-E*chi5+chi7",
                "i*lam*chi2+chi8",
                "-i*lam*E*sigma1+i*lam*sigma3-lam*sigma5+E*sigma8",
                "-lam*sigma4-i*lam*sigma6",
            ],
            printed_table: DEL2_TABLE,
        },
    ]
}

/// A four-dimensional irrep on the λ = E² locus, as a combination of the
/// first copy's block vectors.
#[derive(Clone, Debug)]
pub struct Irrep4Spec {
    pub name: &'static str,
    pub parent: &'static str,
    pub combos: &'static [&'static str],
    pub printed_table: PrintedTable,
}

pub fn irrep4_spec(parent_d1: bool, rescaled: bool) -> Irrep4Spec {
    match (parent_d1, rescaled) {
        (true, false) => Irrep4Spec {
            name: "Phi1",
            parent: "DEl.D1",
            combos: &["v2", "u2", "i*chi1+E*chi2", "-i*sigma1+E*sigma2"],
            printed_table: &[
                (Q10, &["0", "0", "E*v", "-i*u"]),
                (Q10d, &["chi", "i*E*sigma", "0", "0"]),
                (Q01, &["0", "0", "i*u", "E*v"]),
                (Q01d, &["sigma", "-i*E*chi", "0", "0"]),
                (Z, &["u", "E^2*v", "-i*E*sigma", "i*E*chi"]),
            ],
        },
        (true, true) => Irrep4Spec {
            name: "Phi1",
            parent: "DEl.D1",
            combos: &["v2", "u2/E", "-(i*chi1+E*chi2)", "-i*(-i*sigma1+E*sigma2)"],
            printed_table: &[
                (Q10, &["0", "0", "-E*v", "-E*u"]),
                (Q10d, &["-chi", "-sigma", "0", "0"]),
                (Q01, &["0", "0", "-i*E*u", "-i*E*v"]),
                (Q01d, &["i*sigma", "i*chi", "0", "0"]),
                (Z, &["E*u", "E*v", "-E*sigma", "-E*chi"]),
            ],
        },
        (false, false) => Irrep4Spec {
            name: "Phi2",
            parent: "DEl.D2",
            combos: &["v1", "u1/E-u2", "chi1", "sigma1"],
            printed_table: &[
                (Q10, &["-E*chi", "-i*sigma", "0", "0"]),
                (Q10d, &["0", "0", "-v", "i*E*u"]),
                (Q01, &["sigma", "-i*E*chi", "0", "0"]),
                (Q01d, &["0", "0", "i*u", "E*v"]),
                (Z, &["-E*u", "-E*v", "i*sigma", "-i*E^2*chi"]),
            ],
        },
        (false, true) => Irrep4Spec {
            name: "Phi2",
            parent: "DEl.D2",
            combos: &["v1/E", "-(u1/E-u2)/E", "-chi1", "-i*sigma1/E"],
            printed_table: &[
                (Q10, &["chi", "-sigma", "0", "0"]),
                (Q10d, &["0", "0", "E*v", "-E*u"]),
                (Q01, &["i*sigma", "-i*chi", "0", "0"]),
                (Q01d, &["0", "0", "i*E*u", "-i*E*v"]),
                (Z, &["E*u", "E*v", "E*sigma", "E*chi"]),
            ],
        },
    }
}

/// A printed statement that disagrees with the exact computation, with the
/// corrected form the toolkit uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub location: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub detected_by: &'static str,
}

pub fn errata() -> Vec<Erratum> {
    vec![
        Erratum {
            location: "D(E) block 2, basis vector sigma",
            printed: "2*E*sigma2-sigma3",
            corrected: "2*E*sigma2-sigma4",
            detected_by: "printed basis of DE.2 is not closed under the generators",
        },
        Erratum {
            location: "D(E) block 4, Q01 image of sigma",
            printed: "u",
            corrected: "v",
            detected_by: "regenerated DE.4 table; the printed entry also violates the grading",
        },
        Erratum {
            location: "D(E,lam) D2, basis vector v1, coefficient of v7",
            printed: "-i/lam*(lam-2*E^2)",
            corrected: "-i/(2*lam)*(lam-2*E^2)",
            detected_by: "printed basis of DEl.D2 is not closed; corrected vector reproduces the printed table",
        },
        Erratum {
            location: "D(E,lam) D2, Q10d image of sigma1",
            printed: "i*u1-i*E*u1",
            corrected: "i*u1-i*E*u2",
            detected_by: "regenerated DEl.D2 table",
        },
        Erratum {
            location: "D(E,lam) second D1 copy, chi1, chi2, sigma1",
            printed: "chi1 with lam*(lam-E^2)*chi1; chi2 and sigma1 not images of v1",
            corrected: "images of the printed v1 under the common D1 table",
            detected_by: "printed basis of DEl.D1t is not closed",
        },
        Erratum {
            location: "D(E,lam) second D2 copy, v1 and v2",
            printed: "v8 coefficients 1-E/2+E^2/lam-E^3/lam and -i*(lam/2-E+E^2), v7 coefficient -i/2",
            corrected: "v1 = -i*lam*E/2*v1+i*lam*v2+i*E*v4-E/2*v7+E/2*v8, v2 = lam^2/2*v1-lam*v4-i*lam/2*(v7+v8)",
            detected_by: "printed basis of DEl.D2t is not closed",
        },
        Erratum {
            location: "D1 invariant-subspace witnesses, Q01d Z w",
            printed: "c2*(E*chi1-i*lam*chi2) written with the D2 vector chi2^(2)",
            corrected: "c2*(E*chi1-i*lam*chi2) in D1 coordinates",
            detected_by: "probe witnesses computed from the DEl.D1 block table",
        },
    ]
}
