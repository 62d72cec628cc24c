//! Frozen per-type invariants derived with an independent ambient-coordinate
//! construction (reflection closure over the Bourbaki simple roots), used as
//! cross-checks against the Cartan-matrix implementation.
#![allow(dead_code)]

pub struct TypeFacts {
    pub name: &'static str,
    pub positive_roots: usize,
    /// theta^vee in simple-coroot coordinates
    pub m_theta: &'static [i64],
    /// <alpha_i, theta^vee> for i = 1..rank
    pub c_theta: &'static [i64],
    /// theta_s^vee in simple-coroot coordinates (empty when simply laced)
    pub m_theta_short: &'static [i64],
    /// <alpha_i, theta_s^vee> (empty when simply laced)
    pub c_theta_short: &'static [i64],
    /// permutation -w0 on simple-root indices (1-based)
    pub sigma: &'static [usize],
    pub rho_theta: i64,
    pub kappa_theta: i64,
    pub dim_p_omin: i64,
    pub line_weights: &'static [usize],
    pub minuscule_weights: &'static [usize],
}

#[allow(dead_code)]
pub fn facts(name: &str) -> &'static TypeFacts {
    TYPE_FACTS.iter().find(|f| f.name == name).unwrap()
}

pub const TYPE_FACTS: &[TypeFacts] = &[
    TypeFacts {
        name: "A1",
        positive_roots: 1,
        m_theta: &[1],
        c_theta: &[2],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[1],
        rho_theta: 1,
        kappa_theta: 4,
        dim_p_omin: 1,
        line_weights: &[1],
        minuscule_weights: &[1],
    },
    TypeFacts {
        name: "A2",
        positive_roots: 3,
        m_theta: &[1, 1],
        c_theta: &[1, 1],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[2, 1],
        rho_theta: 2,
        kappa_theta: 6,
        dim_p_omin: 3,
        line_weights: &[1, 2],
        minuscule_weights: &[1, 2],
    },
    TypeFacts {
        name: "A3",
        positive_roots: 6,
        m_theta: &[1, 1, 1],
        c_theta: &[1, 0, 1],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[3, 2, 1],
        rho_theta: 3,
        kappa_theta: 8,
        dim_p_omin: 5,
        line_weights: &[1, 2, 3],
        minuscule_weights: &[1, 2, 3],
    },
    TypeFacts {
        name: "A4",
        positive_roots: 10,
        m_theta: &[1, 1, 1, 1],
        c_theta: &[1, 0, 0, 1],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[4, 3, 2, 1],
        rho_theta: 4,
        kappa_theta: 10,
        dim_p_omin: 7,
        line_weights: &[1, 2, 3, 4],
        minuscule_weights: &[1, 2, 3, 4],
    },
    TypeFacts {
        name: "A5",
        positive_roots: 15,
        m_theta: &[1, 1, 1, 1, 1],
        c_theta: &[1, 0, 0, 0, 1],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[5, 4, 3, 2, 1],
        rho_theta: 5,
        kappa_theta: 12,
        dim_p_omin: 9,
        line_weights: &[1, 2, 3, 4, 5],
        minuscule_weights: &[1, 2, 3, 4, 5],
    },
    TypeFacts {
        name: "A6",
        positive_roots: 21,
        m_theta: &[1, 1, 1, 1, 1, 1],
        c_theta: &[1, 0, 0, 0, 0, 1],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[6, 5, 4, 3, 2, 1],
        rho_theta: 6,
        kappa_theta: 14,
        dim_p_omin: 11,
        line_weights: &[1, 2, 3, 4, 5, 6],
        minuscule_weights: &[1, 2, 3, 4, 5, 6],
    },
    TypeFacts {
        name: "A7",
        positive_roots: 28,
        m_theta: &[1, 1, 1, 1, 1, 1, 1],
        c_theta: &[1, 0, 0, 0, 0, 0, 1],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[7, 6, 5, 4, 3, 2, 1],
        rho_theta: 7,
        kappa_theta: 16,
        dim_p_omin: 13,
        line_weights: &[1, 2, 3, 4, 5, 6, 7],
        minuscule_weights: &[1, 2, 3, 4, 5, 6, 7],
    },
    TypeFacts {
        name: "A8",
        positive_roots: 36,
        m_theta: &[1, 1, 1, 1, 1, 1, 1, 1],
        c_theta: &[1, 0, 0, 0, 0, 0, 0, 1],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[8, 7, 6, 5, 4, 3, 2, 1],
        rho_theta: 8,
        kappa_theta: 18,
        dim_p_omin: 15,
        line_weights: &[1, 2, 3, 4, 5, 6, 7, 8],
        minuscule_weights: &[1, 2, 3, 4, 5, 6, 7, 8],
    },
    TypeFacts {
        name: "B2",
        positive_roots: 4,
        m_theta: &[1, 1],
        c_theta: &[0, 1],
        m_theta_short: &[2, 1],
        c_theta_short: &[2, 0],
        sigma: &[1, 2],
        rho_theta: 2,
        kappa_theta: 5,
        dim_p_omin: 3,
        line_weights: &[1, 2],
        minuscule_weights: &[2],
    },
    TypeFacts {
        name: "B3",
        positive_roots: 9,
        m_theta: &[1, 2, 1],
        c_theta: &[0, 1, 0],
        m_theta_short: &[2, 2, 1],
        c_theta_short: &[2, 0, 0],
        sigma: &[1, 2, 3],
        rho_theta: 4,
        kappa_theta: 9,
        dim_p_omin: 7,
        line_weights: &[1, 3],
        minuscule_weights: &[3],
    },
    TypeFacts {
        name: "B4",
        positive_roots: 16,
        m_theta: &[1, 2, 2, 1],
        c_theta: &[0, 1, 0, 0],
        m_theta_short: &[2, 2, 2, 1],
        c_theta_short: &[2, 0, 0, 0],
        sigma: &[1, 2, 3, 4],
        rho_theta: 6,
        kappa_theta: 13,
        dim_p_omin: 11,
        line_weights: &[1, 4],
        minuscule_weights: &[4],
    },
    TypeFacts {
        name: "B5",
        positive_roots: 25,
        m_theta: &[1, 2, 2, 2, 1],
        c_theta: &[0, 1, 0, 0, 0],
        m_theta_short: &[2, 2, 2, 2, 1],
        c_theta_short: &[2, 0, 0, 0, 0],
        sigma: &[1, 2, 3, 4, 5],
        rho_theta: 8,
        kappa_theta: 17,
        dim_p_omin: 15,
        line_weights: &[1, 5],
        minuscule_weights: &[5],
    },
    TypeFacts {
        name: "B6",
        positive_roots: 36,
        m_theta: &[1, 2, 2, 2, 2, 1],
        c_theta: &[0, 1, 0, 0, 0, 0],
        m_theta_short: &[2, 2, 2, 2, 2, 1],
        c_theta_short: &[2, 0, 0, 0, 0, 0],
        sigma: &[1, 2, 3, 4, 5, 6],
        rho_theta: 10,
        kappa_theta: 21,
        dim_p_omin: 19,
        line_weights: &[1, 6],
        minuscule_weights: &[6],
    },
    TypeFacts {
        name: "B7",
        positive_roots: 49,
        m_theta: &[1, 2, 2, 2, 2, 2, 1],
        c_theta: &[0, 1, 0, 0, 0, 0, 0],
        m_theta_short: &[2, 2, 2, 2, 2, 2, 1],
        c_theta_short: &[2, 0, 0, 0, 0, 0, 0],
        sigma: &[1, 2, 3, 4, 5, 6, 7],
        rho_theta: 12,
        kappa_theta: 25,
        dim_p_omin: 23,
        line_weights: &[1, 7],
        minuscule_weights: &[7],
    },
    TypeFacts {
        name: "B8",
        positive_roots: 64,
        m_theta: &[1, 2, 2, 2, 2, 2, 2, 1],
        c_theta: &[0, 1, 0, 0, 0, 0, 0, 0],
        m_theta_short: &[2, 2, 2, 2, 2, 2, 2, 1],
        c_theta_short: &[2, 0, 0, 0, 0, 0, 0, 0],
        sigma: &[1, 2, 3, 4, 5, 6, 7, 8],
        rho_theta: 14,
        kappa_theta: 29,
        dim_p_omin: 27,
        line_weights: &[1, 8],
        minuscule_weights: &[8],
    },
    TypeFacts {
        name: "C2",
        positive_roots: 4,
        m_theta: &[1, 1],
        c_theta: &[1, 0],
        m_theta_short: &[1, 2],
        c_theta_short: &[0, 2],
        sigma: &[1, 2],
        rho_theta: 2,
        kappa_theta: 5,
        dim_p_omin: 3,
        line_weights: &[1, 2],
        minuscule_weights: &[1],
    },
    TypeFacts {
        name: "C3",
        positive_roots: 9,
        m_theta: &[1, 1, 1],
        c_theta: &[1, 0, 0],
        m_theta_short: &[1, 2, 2],
        c_theta_short: &[0, 1, 0],
        sigma: &[1, 2, 3],
        rho_theta: 3,
        kappa_theta: 7,
        dim_p_omin: 5,
        line_weights: &[1, 2, 3],
        minuscule_weights: &[1],
    },
    TypeFacts {
        name: "C4",
        positive_roots: 16,
        m_theta: &[1, 1, 1, 1],
        c_theta: &[1, 0, 0, 0],
        m_theta_short: &[1, 2, 2, 2],
        c_theta_short: &[0, 1, 0, 0],
        sigma: &[1, 2, 3, 4],
        rho_theta: 4,
        kappa_theta: 9,
        dim_p_omin: 7,
        line_weights: &[1, 2, 3, 4],
        minuscule_weights: &[1],
    },
    TypeFacts {
        name: "C5",
        positive_roots: 25,
        m_theta: &[1, 1, 1, 1, 1],
        c_theta: &[1, 0, 0, 0, 0],
        m_theta_short: &[1, 2, 2, 2, 2],
        c_theta_short: &[0, 1, 0, 0, 0],
        sigma: &[1, 2, 3, 4, 5],
        rho_theta: 5,
        kappa_theta: 11,
        dim_p_omin: 9,
        line_weights: &[1, 2, 3, 4, 5],
        minuscule_weights: &[1],
    },
    TypeFacts {
        name: "C6",
        positive_roots: 36,
        m_theta: &[1, 1, 1, 1, 1, 1],
        c_theta: &[1, 0, 0, 0, 0, 0],
        m_theta_short: &[1, 2, 2, 2, 2, 2],
        c_theta_short: &[0, 1, 0, 0, 0, 0],
        sigma: &[1, 2, 3, 4, 5, 6],
        rho_theta: 6,
        kappa_theta: 13,
        dim_p_omin: 11,
        line_weights: &[1, 2, 3, 4, 5, 6],
        minuscule_weights: &[1],
    },
    TypeFacts {
        name: "C7",
        positive_roots: 49,
        m_theta: &[1, 1, 1, 1, 1, 1, 1],
        c_theta: &[1, 0, 0, 0, 0, 0, 0],
        m_theta_short: &[1, 2, 2, 2, 2, 2, 2],
        c_theta_short: &[0, 1, 0, 0, 0, 0, 0],
        sigma: &[1, 2, 3, 4, 5, 6, 7],
        rho_theta: 7,
        kappa_theta: 15,
        dim_p_omin: 13,
        line_weights: &[1, 2, 3, 4, 5, 6, 7],
        minuscule_weights: &[1],
    },
    TypeFacts {
        name: "C8",
        positive_roots: 64,
        m_theta: &[1, 1, 1, 1, 1, 1, 1, 1],
        c_theta: &[1, 0, 0, 0, 0, 0, 0, 0],
        m_theta_short: &[1, 2, 2, 2, 2, 2, 2, 2],
        c_theta_short: &[0, 1, 0, 0, 0, 0, 0, 0],
        sigma: &[1, 2, 3, 4, 5, 6, 7, 8],
        rho_theta: 8,
        kappa_theta: 17,
        dim_p_omin: 15,
        line_weights: &[1, 2, 3, 4, 5, 6, 7, 8],
        minuscule_weights: &[1],
    },
    TypeFacts {
        name: "D4",
        positive_roots: 12,
        m_theta: &[1, 2, 1, 1],
        c_theta: &[0, 1, 0, 0],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[1, 2, 3, 4],
        rho_theta: 5,
        kappa_theta: 11,
        dim_p_omin: 9,
        line_weights: &[1, 3, 4],
        minuscule_weights: &[1, 3, 4],
    },
    TypeFacts {
        name: "D5",
        positive_roots: 20,
        m_theta: &[1, 2, 2, 1, 1],
        c_theta: &[0, 1, 0, 0, 0],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[1, 2, 3, 5, 4],
        rho_theta: 7,
        kappa_theta: 15,
        dim_p_omin: 13,
        line_weights: &[1, 4, 5],
        minuscule_weights: &[1, 4, 5],
    },
    TypeFacts {
        name: "D6",
        positive_roots: 30,
        m_theta: &[1, 2, 2, 2, 1, 1],
        c_theta: &[0, 1, 0, 0, 0, 0],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[1, 2, 3, 4, 5, 6],
        rho_theta: 9,
        kappa_theta: 19,
        dim_p_omin: 17,
        line_weights: &[1, 5, 6],
        minuscule_weights: &[1, 5, 6],
    },
    TypeFacts {
        name: "D7",
        positive_roots: 42,
        m_theta: &[1, 2, 2, 2, 2, 1, 1],
        c_theta: &[0, 1, 0, 0, 0, 0, 0],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[1, 2, 3, 4, 5, 7, 6],
        rho_theta: 11,
        kappa_theta: 23,
        dim_p_omin: 21,
        line_weights: &[1, 6, 7],
        minuscule_weights: &[1, 6, 7],
    },
    TypeFacts {
        name: "D8",
        positive_roots: 56,
        m_theta: &[1, 2, 2, 2, 2, 2, 1, 1],
        c_theta: &[0, 1, 0, 0, 0, 0, 0, 0],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[1, 2, 3, 4, 5, 6, 7, 8],
        rho_theta: 13,
        kappa_theta: 27,
        dim_p_omin: 25,
        line_weights: &[1, 7, 8],
        minuscule_weights: &[1, 7, 8],
    },
    TypeFacts {
        name: "E6",
        positive_roots: 36,
        m_theta: &[1, 2, 2, 3, 2, 1],
        c_theta: &[0, 1, 0, 0, 0, 0],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[6, 2, 5, 4, 3, 1],
        rho_theta: 11,
        kappa_theta: 23,
        dim_p_omin: 21,
        line_weights: &[1, 6],
        minuscule_weights: &[1, 6],
    },
    TypeFacts {
        name: "E7",
        positive_roots: 63,
        m_theta: &[2, 2, 3, 4, 3, 2, 1],
        c_theta: &[1, 0, 0, 0, 0, 0, 0],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[1, 2, 3, 4, 5, 6, 7],
        rho_theta: 17,
        kappa_theta: 35,
        dim_p_omin: 33,
        line_weights: &[7],
        minuscule_weights: &[7],
    },
    TypeFacts {
        name: "E8",
        positive_roots: 120,
        m_theta: &[2, 3, 4, 6, 5, 4, 3, 2],
        c_theta: &[0, 0, 0, 0, 0, 0, 0, 1],
        m_theta_short: &[],
        c_theta_short: &[],
        sigma: &[1, 2, 3, 4, 5, 6, 7, 8],
        rho_theta: 29,
        kappa_theta: 59,
        dim_p_omin: 57,
        line_weights: &[],
        minuscule_weights: &[],
    },
    TypeFacts {
        name: "F4",
        positive_roots: 24,
        m_theta: &[2, 3, 2, 1],
        c_theta: &[1, 0, 0, 0],
        m_theta_short: &[2, 4, 3, 2],
        c_theta_short: &[0, 0, 0, 1],
        sigma: &[1, 2, 3, 4],
        rho_theta: 8,
        kappa_theta: 17,
        dim_p_omin: 15,
        line_weights: &[4],
        minuscule_weights: &[],
    },
    TypeFacts {
        name: "G2",
        positive_roots: 6,
        m_theta: &[1, 2],
        c_theta: &[0, 1],
        m_theta_short: &[2, 3],
        c_theta_short: &[1, 0],
        sigma: &[1, 2],
        rho_theta: 3,
        kappa_theta: 7,
        dim_p_omin: 5,
        line_weights: &[1],
        minuscule_weights: &[],
    },
];
