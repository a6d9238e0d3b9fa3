//! The catalog data: every one-generated nilpotent Novikov algebra of
//! dimension at most six, as parameterized multiplication tables together
//! with the recorded cohomology bases, automorphism templates, class
//! actions, extension provenance, and cross-family identifications.

use super::{CatalogEntry, CohomologyRecord, ConstructionRecord, EquivalenceClaim};

pub static ENTRIES: &[CatalogEntry] = &[
    // Dimension 2.
    CatalogEntry {
        id: "N2_01",
        dim: 2,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &["e1*e1 = e2"],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[],
    },
    // Dimension 3.
    CatalogEntry {
        id: "N3_01",
        dim: 3,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &["e1*e1 = e2", "e2*e1 = e3"],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N2_01",
            base_params: &[],
            cocycles: &["D21"],
        }],
    },
    CatalogEntry {
        id: "N3_02",
        dim: 3,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &["e1*e1 = e2", "e1*e2 = e3", "e2*e1 = lambda e3"],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[],
    },
    // Dimension 4.
    CatalogEntry {
        id: "N4_01",
        dim: 4,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &["e1*e1 = e2", "e1*e2 = e3", "e2*e1 = e4"],
        ann_dim: 2,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &["D13", "D14 - D41", "D22 + D31 + 2 D41"],
            aut_rows: &[
                "x, 0, 0, 0",
                "y, x^2, 0, 0",
                "z, x*y, x^3, 0",
                "v, x*y, 0, x^3",
            ],
            aut_nonzero: &["x"],
            action: &["x^4 * alpha1", "x^4 * alpha2", "x^4 * alpha3"],
        }],
        constructions: &[],
    },
    CatalogEntry {
        id: "N4_02",
        dim: 4,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &["e1*e1 = e2", "e1*e3 = e4", "e2*e1 = e3", "e3*e1 = -e4"],
        ann_dim: 1,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &["D12", "2 D14 - D23 - D41"],
            aut_rows: &[
                "x, 0, 0, 0",
                "0, x^2, 0, 0",
                "y, 0, x^3, 0",
                "z, 0, 0, x^4",
            ],
            aut_nonzero: &["x"],
            action: &["x^3 * alpha1", "x^5 * alpha2"],
        }],
        constructions: &[],
    },
    CatalogEntry {
        id: "N4_03",
        dim: 4,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1/2")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = (2 - lambda) e4",
            "e2*e1 = lambda e3",
            "e2*e2 = lambda e4",
            "e3*e1 = lambda e4",
        ],
        ann_dim: 1,
        cohomology: &[
            CohomologyRecord {
                regime: &[],
                regime_excluded: &["lambda", "lambda - 1"],
                nablas: &[
                    "D21",
                    "(3 - 2*lambda) D14 + lambda (2 - lambda) D23 + lambda D32 + lambda D41",
                ],
                aut_rows: &[
                    "x, 0, 0, 0",
                    "0, x^2, 0, 0",
                    "y, 0, x^3, 0",
                    "z, 2*x*y, 0, x^4",
                ],
                aut_nonzero: &["x"],
                action: &[
                    "x^2 * (x*alpha1 + 2*lambda*(lambda - 1)*y*alpha2)",
                    "x^5 * alpha2",
                ],
            },
            CohomologyRecord {
                regime: &[("lambda", "0")],
                regime_excluded: &[],
                nablas: &["D14", "D21", "2 D23 - 2 D32 + D41"],
                aut_rows: &[
                    "x, 0, 0, 0",
                    "y, x^2, 0, 0",
                    "z, x*y, x^3, 0",
                    "t, 2*x*z, 2*x^2*y, x^4",
                ],
                aut_nonzero: &["x"],
                action: &[
                    "x^5 * alpha1",
                    "x^3 * alpha2 + (4*x^2*z - 2*x*y^2) * alpha3",
                    "x^5 * alpha3",
                ],
            },
            CohomologyRecord {
                regime: &[("lambda", "1")],
                regime_excluded: &[],
                nablas: &["D21", "D14 + D23 + D32 + D41"],
                aut_rows: &[
                    "x, 0, 0, 0",
                    "y, x^2, 0, 0",
                    "z, 2*x*y, x^3, 0",
                    "t, 2*x*z + y^2, 3*x^2*y, x^4",
                ],
                aut_nonzero: &["x"],
                action: &["x^3 * alpha1", "x^5 * alpha2"],
            },
        ],
        constructions: &[],
    },
    CatalogEntry {
        id: "N4_04",
        dim: 4,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &["e1*e1 = e2", "e1*e2 = e3", "e1*e3 = 2 e4", "e2*e1 = e4"],
        ann_dim: 1,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &["D13", "2 D14 + D22 + D31", "D14 - 2 D23 + 2 D32 - D41"],
            aut_rows: &[
                "1, 0, 0, 0",
                "x, 1, 0, 0",
                "y, x, 1, 0",
                "z, x + 2*y, 2*x, 1",
            ],
            aut_nonzero: &[],
            action: &[
                "alpha1 + 2*(x - 2*x^2 + 4*y)*alpha3",
                "alpha2",
                "alpha3",
            ],
        }],
        constructions: &[],
    },
    CatalogEntry {
        id: "N4_05",
        dim: 4,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e4",
            "e2*e1 = e3 + e4",
            "e2*e2 = e4",
            "e3*e1 = e4",
        ],
        ann_dim: 1,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &["D21", "-2 D13 + D14 + D23 + D32 + D41"],
            aut_rows: &[
                "1, 0, 0, 0",
                "x, 1, 0, 0",
                "y, 2*x, 1, 0",
                "z, x^2 + x + 2*y, 3*x, 1",
            ],
            aut_nonzero: &[],
            action: &["alpha1", "alpha2"],
        }],
        constructions: &[],
    },
    // Dimension 5.
    CatalogEntry {
        id: "N5_01",
        dim: 5,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e4",
            "e1*e3 = e5",
            "e2*e1 = e3",
            "e3*e1 = -e5",
        ],
        ann_dim: 2,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &["D14", "2 D13 + D22 + D41", "2 D15 - D23 - D51"],
            aut_rows: &[
                "x, 0, 0, 0, 0",
                "y, x^2, 0, 0, 0",
                "z, x*y, x^3, 0, 0",
                "v, x*y, 0, x^3, 0",
                "w, 0, -x^2*y, x^2*y, x^4",
            ],
            aut_nonzero: &["x"],
            action: &[
                "x^4 * alpha1 + 2*x^3*y * alpha3",
                "x^4 * alpha2 - x^3*y * alpha3",
                "x^5 * alpha3",
            ],
        }],
        constructions: &[],
    },
    CatalogEntry {
        id: "N5_02",
        dim: 5,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "2")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = (2 - lambda) e5",
            "e2*e1 = lambda e3 + e4",
            "e2*e2 = lambda e5",
            "e3*e1 = lambda e5",
        ],
        ann_dim: 2,
        cohomology: &[
            CohomologyRecord {
                regime: &[],
                regime_excluded: &["lambda"],
                nablas: &[
                    "D14 - D41",
                    "D13 - lambda D41",
                    "(3 - 2*lambda) D15 + lambda (2 - lambda) D23 + lambda D32 + lambda D51",
                ],
                aut_rows: &[
                    "x, 0, 0, 0, 0",
                    "y, x^2, 0, 0, 0",
                    "z, (lambda + 1)*x*y, x^3, 0, 0",
                    "v, x*y, 0, x^3, 0",
                    "w, lambda*y^2 + 2*x*z, (-lambda^2 + 2*lambda + 2)*x^2*y, lambda^2*(lambda - 1)*x^2*y, x^4",
                ],
                aut_nonzero: &["x"],
                action: &[
                    "x^4 * alpha1 + x^3*y*lambda^2*(lambda - 1)*(3 - 2*lambda) * alpha3",
                    "x^4 * alpha2 + x^3*y*lambda*(lambda - 1)*(lambda - 3) * alpha3",
                    "x^5 * alpha3",
                ],
            },
            CohomologyRecord {
                regime: &[("lambda", "0")],
                regime_excluded: &[],
                nablas: &[
                    "D14 - D41",
                    "2 D14 + D22 + D31",
                    "D15",
                    "2 D23 - 2 D32 + D51",
                ],
                aut_rows: &[
                    "x, 0, 0, 0, 0",
                    "y, x^2, 0, 0, 0",
                    "z, x*y, x^3, 0, 0",
                    "v, x*y, 0, x^3, 0",
                    "w, 2*x*z, 2*x^2*y, 0, x^4",
                ],
                aut_nonzero: &["x"],
                action: &[
                    "x^4 * alpha1",
                    "x^4 * alpha2",
                    "x^5 * alpha3",
                    "x^5 * alpha4",
                ],
            },
        ],
        constructions: &[],
    },
    CatalogEntry {
        id: "N5_03",
        dim: 5,
        params: &["lambda", "mu"],
        excluded: &[],
        defaults: &[("lambda", "1"), ("mu", "-1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = lambda e5",
            "e1*e4 = mu e5",
            "e2*e1 = e4",
            "e2*e2 = e5",
            "e3*e1 = e5",
            "e4*e1 = (2 - mu) e5",
        ],
        ann_dim: 1,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &[
                "D13",
                "D14 - D41",
                "(2*mu - 1) D15 + lambda (2 - mu) D23 + mu (2 - mu) D24 + (3 - (lambda + 1)*(2 - mu)) D32 + (2 - mu) D42 + (2 - mu) D51",
            ],
            aut_rows: &[
                "x, 0, 0, 0, 0",
                "y, x^2, 0, 0, 0",
                "z, x*y, x^3, 0, 0",
                "v, x*y, 0, x^3, 0",
                "w, (lambda + 1)*x*z + 2*x*v + y^2, (lambda + mu + 1)*x^2*y, (4 - mu)*x^2*y, x^4",
            ],
            aut_nonzero: &["x"],
            action: &[
                "x^4 * alpha1 + x^3*y*(mu + 1)*(2*mu - 1 + lambda*(mu - 2)) * alpha3",
                "x^4 * alpha2 + x^3*y*(mu - 1)*(mu - 2)^2 * alpha3",
                "x^5 * alpha3",
            ],
        }],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_01",
            base_params: &[],
            cocycles: &["lambda D13 + mu D14 + D22 + D31 + (2 - mu) D41"],
        }],
    },
    CatalogEntry {
        id: "N5_04",
        dim: 5,
        params: &["lambda"],
        excluded: &["lambda"],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e5",
            "e1*e4 = lambda e5",
            "e2*e1 = e4",
            "e4*e1 = -lambda e5",
        ],
        ann_dim: 1,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &[
                "D14 - D41",
                "D22 + D31 + 2 D41",
                "-2 D15 + D23 + lambda D24 - D32 + D51",
            ],
            aut_rows: &[
                "x, 0, 0, 0, 0",
                "y, x^2, 0, 0, 0",
                "z, x*y, x^3, 0, 0",
                "v, x*y, 0, x^3, 0",
                "w, x*z, (lambda + 1)*x^2*y, -lambda*x^2*y, x^4",
            ],
            aut_nonzero: &["x"],
            action: &[
                "x^4 * alpha1 + 2*x^3*y*lambda*(lambda + 2) * alpha3",
                "x^4 * alpha2 + x^3*y*lambda * alpha3",
                "x^5 * alpha3",
            ],
        }],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_01",
            base_params: &[],
            cocycles: &["D13 + lambda D14 - lambda D41"],
        }],
    },
    CatalogEntry {
        id: "N5_05",
        dim: 5,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e3 = e4",
            "e1*e4 = 2 e5",
            "e2*e1 = e3",
            "e2*e3 = -e5",
            "e3*e1 = -e4",
            "e4*e1 = -e5",
        ],
        ann_dim: 1,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &["D12", "3 D15 - 2 D24 + D33 - D51"],
            aut_rows: &[
                "x, 0, 0, 0, 0",
                "0, x^2, 0, 0, 0",
                "y, 0, x^3, 0, 0",
                "z, 0, 0, x^4, 0",
                "v, x*z, -x^2*y, 0, x^5",
            ],
            aut_nonzero: &["x"],
            action: &["x^3 * alpha1 + 3*x^2*z * alpha2", "x^6 * alpha2"],
        }],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_02",
            base_params: &[],
            cocycles: &["2 D14 - D23 - D41"],
        }],
    },
    CatalogEntry {
        id: "N5_06",
        dim: 5,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e5",
            "e1*e3 = e4",
            "e1*e4 = 2 e5",
            "e2*e1 = e3",
            "e2*e3 = -e5",
            "e3*e1 = -e4",
            "e4*e1 = -e5",
        ],
        ann_dim: 1,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &["D12", "3 D15 - D22 - 2 D24 - 2 D31 + D33 - D51"],
            aut_rows: &[
                "1, 0, 0, 0, 0",
                "0, 1, 0, 0, 0",
                "x, 0, 1, 0, 0",
                "y, 0, 0, 1, 0",
                "z, y, -x, 0, 1",
            ],
            aut_nonzero: &[],
            action: &["alpha1 + 3*y * alpha2", "alpha2"],
        }],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_02",
            base_params: &[],
            cocycles: &["D12 + 2 D14 - D23 - D41"],
        }],
    },
    CatalogEntry {
        id: "N5_07",
        dim: 5,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "-1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = (2 - lambda) e4",
            "e1*e4 = (3 - 2*lambda) e5",
            "e2*e1 = lambda e3",
            "e2*e2 = lambda e4",
            "e2*e3 = lambda (2 - lambda) e5",
            "e3*e1 = lambda e4",
            "e3*e2 = lambda e5",
            "e4*e1 = lambda e5",
        ],
        ann_dim: 1,
        cohomology: &[
            CohomologyRecord {
                regime: &[],
                regime_excluded: &["lambda", "lambda - 1"],
                nablas: &[
                    "D21",
                    "(4 - 3*lambda) D15 + lambda (3 - 2*lambda) D24 + lambda (2 - lambda) D33 + lambda D42 + lambda D51",
                ],
                aut_rows: &[
                    "x, 0, 0, 0, 0",
                    "0, x^2, 0, 0, 0",
                    "0, 0, x^3, 0, 0",
                    "y, 0, 0, x^4, 0",
                    "z, (3 - lambda)*x*y, 0, 0, x^5",
                ],
                aut_nonzero: &["x"],
                action: &[
                    "x^3 * alpha1 - 3*x^2*y*lambda*(lambda - 1)*(lambda - 2) * alpha2",
                    "x^6 * alpha2",
                ],
            },
            CohomologyRecord {
                regime: &[("lambda", "0")],
                regime_excluded: &[],
                nablas: &["D15", "D21", "2 D23 - 2 D32 + D41"],
                aut_rows: &[
                    "x, 0, 0, 0, 0",
                    "y, x^2, 0, 0, 0",
                    "z, x*y, x^3, 0, 0",
                    "v, 2*x*z, 2*x^2*y, x^4, 0",
                    "w, 3*x*v, 6*x^2*z, 3*x^3*y, x^5",
                ],
                aut_nonzero: &["x"],
                action: &[
                    "x^6 * alpha1",
                    "x^3 * alpha2 + 2*x*(2*x*z - y^2) * alpha3",
                    "x^5 * alpha3",
                ],
            },
            CohomologyRecord {
                regime: &[("lambda", "1")],
                regime_excluded: &[],
                nablas: &["D21", "D15 + D24 + D33 + D42 + D51"],
                aut_rows: &[
                    "x, 0, 0, 0, 0",
                    "y, x^2, 0, 0, 0",
                    "z, 2*x*y, x^3, 0, 0",
                    "v, 2*x*z + y^2, 3*x^2*y, x^4, 0",
                    "w, 2*x*v + 2*y*z, 3*x^2*z + 3*x*y^2, 4*x^3*y, x^5",
                ],
                aut_nonzero: &["x"],
                action: &["x^3 * alpha1", "x^6 * alpha2"],
            },
        ],
        constructions: &[
            ConstructionRecord {
                regime: &[],
                regime_excluded: &["lambda", "lambda - 1"],
                base: "N4_03",
                base_params: &[("lambda", "lambda")],
                cocycles: &[
                    "(3 - 2*lambda) D14 + lambda (2 - lambda) D23 + lambda D32 + lambda D41",
                ],
            },
            ConstructionRecord {
                regime: &[("lambda", "0")],
                regime_excluded: &[],
                base: "N4_03",
                base_params: &[("lambda", "0")],
                cocycles: &["3 D14"],
            },
            ConstructionRecord {
                regime: &[("lambda", "1")],
                regime_excluded: &[],
                base: "N4_03",
                base_params: &[("lambda", "1")],
                cocycles: &["D14 + D23 + D32 + D41"],
            },
        ],
    },
    CatalogEntry {
        id: "N5_08",
        dim: 5,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e4",
            "e1*e4 = e5",
            "e2*e1 = e5",
        ],
        ann_dim: 1,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &["D21", "2 D15 + D22 + D31", "D23 - D32 + D41"],
            aut_rows: &[
                "1, 0, 0, 0, 0",
                "x, 1, 0, 0, 0",
                "y, x, 1, 0, 0",
                "z, y, x, 1, 0",
                "v, x + z, y, x, 1",
            ],
            aut_nonzero: &[],
            action: &["alpha1 - (x^2 - 2*y) * alpha3", "alpha2", "alpha3"],
        }],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_03",
            base_params: &[("lambda", "0")],
            cocycles: &["D14 + 2 D21"],
        }],
    },
    CatalogEntry {
        id: "N5_09",
        dim: 5,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4",
            "e1*e4 = lambda e5",
            "e2*e3 = 2 e5",
            "e3*e2 = -2 e5",
            "e4*e1 = e5",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_03",
            base_params: &[("lambda", "0")],
            cocycles: &["lambda D14 + 2 D23 - 2 D32 + D41"],
        }],
    },
    CatalogEntry {
        id: "N5_10",
        dim: 5,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e4",
            "e1*e4 = e5",
            "e2*e1 = e3 + e5",
            "e2*e2 = e4",
            "e2*e3 = e5",
            "e3*e1 = e4",
            "e3*e2 = e5",
            "e4*e1 = e5",
        ],
        ann_dim: 1,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &["D12", "-2 D13 + D15 + D24 + D33 + D42 + D51"],
            aut_rows: &[
                "1, 0, 0, 0, 0",
                "x, 1, 0, 0, 0",
                "y, 2*x, 1, 0, 0",
                "z, x^2 + 2*y, 3*x, 1, 0",
                "v, 2*x*y + x + 2*z, 3*x^2 + 3*y, 4*x, 1",
            ],
            aut_nonzero: &[],
            action: &["alpha1 + x * alpha2", "alpha2"],
        }],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_03",
            base_params: &[("lambda", "1")],
            cocycles: &["D21 + D14 + D23 + D32 + D41"],
        }],
    },
    CatalogEntry {
        id: "N5_11",
        dim: 5,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4 + lambda e5",
            "e1*e4 = 2 e5",
            "e2*e1 = e4",
            "e2*e2 = e5",
            "e3*e1 = e5",
        ],
        ann_dim: 1,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &["D13", "D15 + D32", "D14 - 2 D23 + 2 D32 - D41"],
            aut_rows: &[
                "1, 0, 0, 0, 0",
                "x, 1, 0, 0, 0",
                "y, x, 1, 0, 0",
                "z, x + 2*y, 2*x, 1, 0",
                "v, x^2 + (lambda + 1)*y + 2*z, (lambda + 3)*x + 4*y, 2*x, 1",
            ],
            aut_nonzero: &[],
            action: &[
                "alpha1 + (3*x + 4*y - 2*x^2) * alpha2 + (8*y + 2*x - 4*x^2) * alpha3",
                "alpha2",
                "alpha3",
            ],
        }],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_04",
            base_params: &[],
            cocycles: &["lambda D13 + 2 D14 + D22 + D31"],
        }],
    },
    CatalogEntry {
        id: "N5_12",
        dim: 5,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4",
            "e1*e4 = (2*lambda + 1) e5",
            "e2*e1 = e4",
            "e2*e2 = lambda e5",
            "e2*e3 = -2 e5",
            "e3*e1 = lambda e5",
            "e3*e2 = 2 e5",
            "e4*e1 = -e5",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_04",
            base_params: &[],
            cocycles: &[
                "(2*lambda + 1) D14 + lambda D22 - 2 D23 + lambda D31 + 2 D32 - D41",
            ],
        }],
    },
    CatalogEntry {
        id: "N5_13",
        dim: 5,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e4 - 2 e5",
            "e1*e4 = e5",
            "e2*e1 = e3 + e4 + lambda e5",
            "e2*e2 = e4",
            "e2*e3 = e5",
            "e3*e1 = e4",
            "e3*e2 = e5",
            "e4*e1 = e5",
        ],
        ann_dim: 1,
        cohomology: &[CohomologyRecord {
            regime: &[],
            regime_excluded: &[],
            nablas: &[
                "D21",
                "(1 - 2*lambda) D13 - 2 D14 + D15 - D23 + D24 + D33 + D41 + D42 + D51",
            ],
            aut_rows: &[
                "1, 0, 0, 0, 0",
                "x, 1, 0, 0, 0",
                "y, 2*x, 1, 0, 0",
                "z, x^2 + x + 2*y, 3*x, 1, 0",
                "v, lambda*x + 2*x*y - 2*y + 2*z, 3*x^2 - 3*x + 3*y, 4*x, 1",
            ],
            aut_nonzero: &[],
            action: &["alpha1 + ((1 - lambda)*x - x^2 + y) * alpha2", "alpha2"],
        }],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_05",
            base_params: &[],
            cocycles: &["lambda D21 - 2 D13 + D14 + D23 + D32 + D41"],
        }],
    },
    // Dimension 6.
    CatalogEntry {
        id: "N6_01",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e5",
            "e1*e4 = e6",
            "e2*e1 = e4",
            "e4*e1 = -e6",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_01",
            base_params: &[],
            cocycles: &["D13", "D14 - D41"],
        }],
    },
    CatalogEntry {
        id: "N6_02",
        dim: 6,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e5",
            "e1*e4 = lambda e6",
            "e2*e1 = e4",
            "e2*e2 = e6",
            "e3*e1 = e6",
            "e4*e1 = (2 - lambda) e6",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_01",
            base_params: &[],
            cocycles: &["D13", "lambda D14 + D22 + D31 + (2 - lambda) D41"],
        }],
    },
    CatalogEntry {
        id: "N6_03",
        dim: 6,
        params: &["lambda", "mu"],
        excluded: &[],
        defaults: &[("lambda", "1"), ("mu", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = lambda e5 + mu e6",
            "e1*e4 = e5",
            "e2*e1 = e4",
            "e2*e2 = e6",
            "e3*e1 = e6",
            "e4*e1 = -e5 + 2 e6",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_01",
            base_params: &[],
            cocycles: &["lambda D13 + D14 - D41", "mu D13 + D22 + D31 + 2 D41"],
        }],
    },
    CatalogEntry {
        id: "N6_04",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e5",
            "e1*e3 = e4",
            "e1*e4 = 2 e6",
            "e2*e1 = e3",
            "e2*e3 = -e6",
            "e3*e1 = -e4",
            "e4*e1 = -e6",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_02",
            base_params: &[],
            cocycles: &["D12", "2 D14 - D23 - D41"],
        }],
    },
    CatalogEntry {
        id: "N6_05",
        dim: 6,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1/2")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = (2 - lambda) e4",
            "e1*e4 = (3 - 2*lambda) e5",
            "e2*e1 = lambda e3 + e6",
            "e2*e2 = lambda e4",
            "e2*e3 = lambda (2 - lambda) e5",
            "e3*e1 = lambda e4",
            "e3*e2 = lambda e5",
            "e4*e1 = lambda e5",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[
            ConstructionRecord {
                regime: &[],
                regime_excluded: &["lambda", "lambda - 1"],
                base: "N4_03",
                base_params: &[("lambda", "lambda")],
                cocycles: &[
                    "(3 - 2*lambda) D14 + lambda (2 - lambda) D23 + lambda D32 + lambda D41",
                    "D21",
                ],
            },
            ConstructionRecord {
                regime: &[("lambda", "0")],
                regime_excluded: &[],
                base: "N4_03",
                base_params: &[("lambda", "0")],
                cocycles: &["3 D14", "D21"],
            },
            ConstructionRecord {
                regime: &[("lambda", "1")],
                regime_excluded: &[],
                base: "N4_03",
                base_params: &[("lambda", "1")],
                cocycles: &["D14 + D23 + D32 + D41", "D21"],
            },
        ],
    },
    CatalogEntry {
        id: "N6_06",
        dim: 6,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4",
            "e1*e4 = lambda e5",
            "e2*e1 = e6",
            "e2*e3 = 2 e5",
            "e3*e2 = -2 e5",
            "e4*e1 = e5",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_03",
            base_params: &[("lambda", "0")],
            cocycles: &["lambda D14 + 2 D23 - 2 D32 + D41", "D21"],
        }],
    },
    CatalogEntry {
        id: "N6_07",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4",
            "e1*e4 = e5",
            "e2*e1 = e5",
            "e2*e3 = 2 e6",
            "e3*e2 = -2 e6",
            "e4*e1 = e6",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_03",
            base_params: &[("lambda", "0")],
            cocycles: &["D14 + D21", "2 D23 - 2 D32 + D41"],
        }],
    },
    CatalogEntry {
        id: "N6_08",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4",
            "e1*e4 = e5",
            "e2*e3 = 2 e6",
            "e3*e2 = -2 e6",
            "e4*e1 = e6",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_03",
            base_params: &[("lambda", "0")],
            cocycles: &["D14", "2 D23 - 2 D32 + D41"],
        }],
    },
    CatalogEntry {
        id: "N6_09",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4 + e6",
            "e1*e4 = 2 e5",
            "e2*e1 = e4",
            "e2*e2 = e5",
            "e3*e1 = e5",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_04",
            base_params: &[],
            cocycles: &["2 D14 + D22 + D31", "D13"],
        }],
    },
    CatalogEntry {
        id: "N6_10",
        dim: 6,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4 + e6",
            "e1*e4 = (2*lambda + 1) e5",
            "e2*e1 = e4",
            "e2*e2 = lambda e5",
            "e2*e3 = -2 e5",
            "e3*e1 = lambda e5",
            "e3*e2 = 2 e5",
            "e4*e1 = -e5",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_04",
            base_params: &[],
            cocycles: &[
                "(2*lambda + 1) D14 + lambda D22 - 2 D23 + lambda D31 + 2 D32 - D41",
                "D13",
            ],
        }],
    },
    CatalogEntry {
        id: "N6_11",
        dim: 6,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4 + lambda e6",
            "e1*e4 = e5 + 2 e6",
            "e2*e1 = e4",
            "e2*e2 = e6",
            "e2*e3 = -2 e5",
            "e3*e1 = e6",
            "e3*e2 = 2 e5",
            "e4*e1 = -e5",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_04",
            base_params: &[],
            cocycles: &[
                "D14 - 2 D23 + 2 D32 - D41",
                "lambda D13 + 2 D14 + D22 + D31",
            ],
        }],
    },
    CatalogEntry {
        id: "N6_12",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e4 - 2 e5",
            "e1*e4 = e5",
            "e2*e1 = e3 + e4 + e6",
            "e2*e2 = e4",
            "e2*e3 = e5",
            "e3*e1 = e4",
            "e3*e2 = e5",
            "e4*e1 = e5",
        ],
        ann_dim: 2,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N4_05",
            base_params: &[],
            cocycles: &["-2 D13 + D14 + D23 + D32 + D41", "D21"],
        }],
    },
    CatalogEntry {
        id: "N6_13",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e4",
            "e1*e3 = e5",
            "e1*e4 = e6",
            "e1*e5 = 2 e6",
            "e2*e1 = e3",
            "e2*e3 = -e6",
            "e3*e1 = -e5",
            "e5*e1 = -e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_01",
            base_params: &[],
            cocycles: &["D14 + 2 D15 - D23 - D51"],
        }],
    },
    CatalogEntry {
        id: "N6_14",
        dim: 6,
        params: &["alpha"],
        excluded: &[],
        defaults: &[("alpha", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e5 + e6",
            "e1*e4 = alpha e6",
            "e1*e5 = e6",
            "e2*e1 = e3 + e4",
            "e2*e2 = e5",
            "e2*e3 = e6",
            "e3*e1 = e5",
            "e3*e2 = e6",
            "e4*e1 = -(alpha + 1) e6",
            "e5*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_02",
            base_params: &[("lambda", "1")],
            cocycles: &["D13 + alpha D14 + D15 + D23 + D32 - (alpha + 1) D41 + D51"],
        }],
    },
    CatalogEntry {
        id: "N6_15",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = -e5 + e6",
            "e1*e5 = -3 e6",
            "e2*e1 = 3 e3 + e4",
            "e2*e2 = 3 e5",
            "e2*e3 = -3 e6",
            "e3*e1 = 3 e5",
            "e3*e2 = 3 e6",
            "e4*e1 = -3 e6",
            "e5*e1 = 3 e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_02",
            base_params: &[("lambda", "3")],
            cocycles: &["D13 - 3 D15 - 3 D23 + 3 D32 - 3 D41 + 3 D51"],
        }],
    },
    CatalogEntry {
        id: "N6_16",
        dim: 6,
        params: &["lambda"],
        excluded: &["lambda - 3"],
        defaults: &[("lambda", "2")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = (2 - lambda) e5",
            "e1*e4 = e6",
            "e1*e5 = (3 - 2*lambda) e6",
            "e2*e1 = lambda e3 + e4",
            "e2*e2 = lambda e5",
            "e2*e3 = lambda (2 - lambda) e6",
            "e3*e1 = lambda e5",
            "e3*e2 = lambda e6",
            "e4*e1 = -e6",
            "e5*e1 = lambda e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[
            ConstructionRecord {
                regime: &[],
                regime_excluded: &["lambda"],
                base: "N5_02",
                base_params: &[("lambda", "lambda")],
                cocycles: &[
                    "D14 - D41 + (3 - 2*lambda) D15 + lambda (2 - lambda) D23 + lambda D32 + lambda D51",
                ],
            },
            ConstructionRecord {
                regime: &[("lambda", "0")],
                regime_excluded: &[],
                base: "N5_02",
                base_params: &[("lambda", "0")],
                cocycles: &["D14 - D41 + D15"],
            },
        ],
    },
    CatalogEntry {
        id: "N6_17",
        dim: 6,
        params: &["alpha"],
        excluded: &[],
        defaults: &[("alpha", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e5",
            "e1*e4 = e6",
            "e1*e5 = alpha e6",
            "e2*e1 = e4",
            "e2*e3 = 2 e6",
            "e3*e2 = -2 e6",
            "e4*e1 = -e6",
            "e5*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_02",
            base_params: &[("lambda", "0")],
            cocycles: &["D14 - D41 + alpha D15 + 2 D23 - 2 D32 + D51"],
        }],
    },
    CatalogEntry {
        id: "N6_18",
        dim: 6,
        params: &["alpha"],
        excluded: &[],
        defaults: &[("alpha", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e5",
            "e1*e4 = (alpha + 2) e6",
            "e1*e5 = e6",
            "e2*e1 = e4",
            "e2*e2 = e6",
            "e3*e1 = e6",
            "e4*e1 = -alpha e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_02",
            base_params: &[("lambda", "0")],
            cocycles: &["(alpha + 2) D14 + D15 + D22 + D31 - alpha D41"],
        }],
    },
    CatalogEntry {
        id: "N6_19",
        dim: 6,
        params: &["alpha", "beta"],
        excluded: &[],
        defaults: &[("alpha", "1"), ("beta", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e5",
            "e1*e4 = (alpha + 2) e6",
            "e1*e5 = beta e6",
            "e2*e1 = e4",
            "e2*e2 = e6",
            "e2*e3 = 2 e6",
            "e3*e1 = e6",
            "e3*e2 = -2 e6",
            "e4*e1 = -alpha e6",
            "e5*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_02",
            base_params: &[("lambda", "0")],
            cocycles: &[
                "(alpha + 2) D14 + beta D15 + D22 + 2 D23 + D31 - 2 D32 - alpha D41 + D51",
            ],
        }],
    },
    CatalogEntry {
        id: "N6_20",
        dim: 6,
        params: &["lambda", "mu"],
        excluded: &[],
        defaults: &[("lambda", "1"), ("mu", "-1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = lambda e5",
            "e1*e4 = mu e5",
            "e1*e5 = (2*mu - 1) e6",
            "e2*e1 = e4",
            "e2*e2 = e5",
            "e2*e3 = lambda (2 - mu) e6",
            "e2*e4 = mu (2 - mu) e6",
            "e3*e1 = e5",
            "e3*e2 = (3 - (lambda + 1)*(2 - mu)) e6",
            "e4*e1 = (2 - mu) e5",
            "e4*e2 = (2 - mu) e6",
            "e5*e1 = (2 - mu) e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_03",
            base_params: &[("lambda", "lambda"), ("mu", "mu")],
            cocycles: &[
                "(2*mu - 1) D15 + lambda (2 - mu) D23 + mu (2 - mu) D24 + (3 - (lambda + 1)*(2 - mu)) D32 + (2 - mu) D42 + (2 - mu) D51",
            ],
        }],
    },
    CatalogEntry {
        id: "N6_21",
        dim: 6,
        params: &["lambda", "mu"],
        excluded: &["mu - 2"],
        defaults: &[("lambda", "1"), ("mu", "-1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = lambda e5 + e6",
            "e1*e4 = mu e5",
            "e1*e5 = (2*mu - 1) e6",
            "e2*e1 = e4",
            "e2*e2 = e5",
            "e2*e3 = lambda (2 - mu) e6",
            "e2*e4 = mu (2 - mu) e6",
            "e3*e1 = e5",
            "e3*e2 = (3 - (lambda + 1)*(2 - mu)) e6",
            "e4*e1 = (2 - mu) e5",
            "e4*e2 = (2 - mu) e6",
            "e5*e1 = (2 - mu) e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_03",
            base_params: &[("lambda", "lambda"), ("mu", "mu")],
            cocycles: &[
                "D13 + (2*mu - 1) D15 + lambda (2 - mu) D23 + mu (2 - mu) D24 + (3 - (lambda + 1)*(2 - mu)) D32 + (2 - mu) D42 + (2 - mu) D51",
            ],
        }],
    },
    CatalogEntry {
        id: "N6_22",
        dim: 6,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "2")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = lambda e5",
            "e1*e4 = e5 + e6",
            "e1*e5 = e6",
            "e2*e1 = e4",
            "e2*e2 = e5",
            "e2*e3 = lambda e6",
            "e2*e4 = e6",
            "e3*e1 = e5",
            "e3*e2 = (2 - lambda) e6",
            "e4*e1 = e5 - e6",
            "e4*e2 = e6",
            "e5*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_03",
            base_params: &[("lambda", "lambda"), ("mu", "1")],
            cocycles: &[
                "D14 - D41 + D15 + lambda D23 + D24 + (2 - lambda) D32 + D42 + D51",
            ],
        }],
    },
    CatalogEntry {
        id: "N6_23",
        dim: 6,
        params: &["nu"],
        excluded: &["nu"],
        defaults: &[("nu", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e5 + nu e6",
            "e1*e4 = e5 + e6",
            "e1*e5 = e6",
            "e2*e1 = e4",
            "e2*e2 = e5",
            "e2*e3 = e6",
            "e2*e4 = e6",
            "e3*e1 = e5",
            "e3*e2 = e6",
            "e4*e1 = e5 - e6",
            "e4*e2 = e6",
            "e5*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_03",
            base_params: &[("lambda", "1"), ("mu", "1")],
            cocycles: &[
                "nu D13 + D14 - D41 + D15 + D23 + D24 + D32 + D42 + D51",
            ],
        }],
    },
    CatalogEntry {
        id: "N6_24",
        dim: 6,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = lambda e5",
            "e1*e4 = 2 e5 + e6",
            "e1*e5 = 3 e6",
            "e2*e1 = e4",
            "e2*e2 = e5",
            "e3*e1 = e5",
            "e3*e2 = 3 e6",
            "e4*e1 = -e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_03",
            base_params: &[("lambda", "lambda"), ("mu", "2")],
            cocycles: &["D14 - D41 + 3 D15 + 3 D32"],
        }],
    },
    CatalogEntry {
        id: "N6_25",
        dim: 6,
        params: &["lambda"],
        excluded: &["lambda"],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e5",
            "e1*e4 = lambda e5",
            "e1*e5 = -2 e6",
            "e2*e1 = e4",
            "e2*e3 = e6",
            "e2*e4 = lambda e6",
            "e3*e2 = -e6",
            "e4*e1 = -lambda e5",
            "e5*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_04",
            base_params: &[("lambda", "lambda")],
            cocycles: &["-2 D15 + D23 + lambda D24 - D32 + D51"],
        }],
    },
    CatalogEntry {
        id: "N6_26",
        dim: 6,
        params: &["lambda"],
        excluded: &["lambda"],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e5",
            "e1*e4 = lambda e5 + e6",
            "e1*e5 = -2 e6",
            "e2*e1 = e4",
            "e2*e3 = e6",
            "e2*e4 = lambda e6",
            "e3*e2 = -e6",
            "e4*e1 = -lambda e5 - e6",
            "e5*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_04",
            base_params: &[("lambda", "lambda")],
            cocycles: &["D14 - D41 - 2 D15 + D23 + lambda D24 - D32 + D51"],
        }],
    },
    CatalogEntry {
        id: "N6_27",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e3 = e4",
            "e1*e4 = 2 e5",
            "e1*e5 = 3 e6",
            "e2*e1 = e3",
            "e2*e3 = -e5",
            "e2*e4 = -2 e6",
            "e3*e1 = -e4",
            "e3*e3 = e6",
            "e4*e1 = -e5",
            "e5*e1 = -e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_05",
            base_params: &[],
            cocycles: &["3 D15 - 2 D24 + D33 - D51"],
        }],
    },
    CatalogEntry {
        id: "N6_28",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e5",
            "e1*e3 = e4",
            "e1*e4 = 2 e5",
            "e1*e5 = 3 e6",
            "e2*e1 = e3",
            "e2*e2 = -e6",
            "e2*e3 = -e5",
            "e2*e4 = -2 e6",
            "e3*e1 = -e4 - 2 e6",
            "e3*e3 = e6",
            "e4*e1 = -e5",
            "e5*e1 = -e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_06",
            base_params: &[],
            cocycles: &["3 D15 - D22 - 2 D24 - 2 D31 + D33 - D51"],
        }],
    },
    CatalogEntry {
        id: "N6_29",
        dim: 6,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "-1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = (2 - lambda) e4",
            "e1*e4 = (3 - 2*lambda) e5",
            "e1*e5 = (4 - 3*lambda) e6",
            "e2*e1 = lambda e3",
            "e2*e2 = lambda e4",
            "e2*e3 = lambda (2 - lambda) e5",
            "e2*e4 = lambda (3 - 2*lambda) e6",
            "e3*e1 = lambda e4",
            "e3*e2 = lambda e5",
            "e3*e3 = lambda (2 - lambda) e6",
            "e4*e1 = lambda e5",
            "e4*e2 = lambda e6",
            "e5*e1 = lambda e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[
            ConstructionRecord {
                regime: &[],
                regime_excluded: &["lambda", "lambda - 1"],
                base: "N5_07",
                base_params: &[("lambda", "lambda")],
                cocycles: &[
                    "(4 - 3*lambda) D15 + lambda (3 - 2*lambda) D24 + lambda (2 - lambda) D33 + lambda D42 + lambda D51",
                ],
            },
            ConstructionRecord {
                regime: &[("lambda", "0")],
                regime_excluded: &[],
                base: "N5_07",
                base_params: &[("lambda", "0")],
                cocycles: &["4 D15"],
            },
            ConstructionRecord {
                regime: &[("lambda", "1")],
                regime_excluded: &[],
                base: "N5_07",
                base_params: &[("lambda", "1")],
                cocycles: &["D15 + D24 + D33 + D42 + D51"],
            },
        ],
    },
    CatalogEntry {
        id: "N6_30",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e4 = -e5",
            "e1*e5 = -2 e6",
            "e2*e1 = 2 e3 + e6",
            "e2*e2 = 2 e4",
            "e2*e4 = -2 e6",
            "e3*e1 = 2 e4",
            "e3*e2 = 2 e5",
            "e4*e1 = 2 e5",
            "e4*e2 = 2 e6",
            "e5*e1 = 2 e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_07",
            base_params: &[("lambda", "2")],
            cocycles: &["D21 - 2 D15 - 2 D24 + 2 D42 + 2 D51"],
        }],
    },
    CatalogEntry {
        id: "N6_31",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4",
            "e1*e4 = 3 e5",
            "e1*e5 = e6",
            "e2*e3 = 2 e6",
            "e3*e2 = -2 e6",
            "e4*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_07",
            base_params: &[("lambda", "0")],
            cocycles: &["D15 + 2 D23 - 2 D32 + D41"],
        }],
    },
    CatalogEntry {
        id: "N6_32",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4",
            "e1*e4 = 3 e5",
            "e1*e5 = e6",
            "e2*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_07",
            base_params: &[("lambda", "0")],
            cocycles: &["D15 + D21"],
        }],
    },
    CatalogEntry {
        id: "N6_33",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e4",
            "e1*e4 = e5",
            "e1*e5 = e6",
            "e2*e1 = e3 + e6",
            "e2*e2 = e4",
            "e2*e3 = e5",
            "e2*e4 = e6",
            "e3*e1 = e4",
            "e3*e2 = e5",
            "e3*e3 = e6",
            "e4*e1 = e5",
            "e4*e2 = e6",
            "e5*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_07",
            base_params: &[("lambda", "1")],
            cocycles: &["D21 + D15 + D24 + D33 + D42 + D51"],
        }],
    },
    CatalogEntry {
        id: "N6_34",
        dim: 6,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e4",
            "e1*e4 = e5",
            "e1*e5 = 2 e6",
            "e2*e1 = e5 + lambda e6",
            "e2*e2 = e6",
            "e3*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_08",
            base_params: &[],
            cocycles: &["lambda D21 + 2 D15 + D22 + D31"],
        }],
    },
    CatalogEntry {
        id: "N6_35",
        dim: 6,
        params: &["lambda"],
        excluded: &["lambda"],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e4",
            "e1*e4 = e5",
            "e1*e5 = 2 e6",
            "e2*e1 = e5",
            "e2*e2 = e6",
            "e2*e3 = lambda e6",
            "e3*e1 = e6",
            "e3*e2 = -lambda e6",
            "e4*e1 = lambda e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_08",
            base_params: &[],
            cocycles: &["2 D15 + D22 + D31 + lambda D23 - lambda D32 + lambda D41"],
        }],
    },
    CatalogEntry {
        id: "N6_36",
        dim: 6,
        params: &[],
        excluded: &[],
        defaults: &[],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e4 - 2 e6",
            "e1*e4 = e5",
            "e1*e5 = e6",
            "e2*e1 = e3 + e5",
            "e2*e2 = e4",
            "e2*e3 = e5",
            "e2*e4 = e6",
            "e3*e1 = e4",
            "e3*e2 = e5",
            "e3*e3 = e6",
            "e4*e1 = e5",
            "e4*e2 = e6",
            "e5*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_10",
            base_params: &[],
            cocycles: &["-2 D13 + D15 + D24 + D33 + D42 + D51"],
        }],
    },
    CatalogEntry {
        id: "N6_37",
        dim: 6,
        params: &["lambda", "mu"],
        excluded: &[],
        defaults: &[("lambda", "1"), ("mu", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = 2 e4 + lambda e5",
            "e1*e4 = 2 e5 + mu e6",
            "e1*e5 = e6",
            "e2*e1 = e4",
            "e2*e2 = e5",
            "e2*e3 = -2 mu e6",
            "e3*e1 = e5",
            "e3*e2 = (1 + 2*mu) e6",
            "e4*e1 = -mu e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_11",
            base_params: &[("lambda", "lambda")],
            cocycles: &["mu D14 + D15 - 2 mu D23 + (1 + 2*mu) D32 - mu D41"],
        }],
    },
    CatalogEntry {
        id: "N6_38",
        dim: 6,
        params: &["lambda"],
        excluded: &[],
        defaults: &[("lambda", "1")],
        products: &[
            "e1*e1 = e2",
            "e1*e2 = e3",
            "e1*e3 = e4 - 2 e5 + (1 - 2*lambda) e6",
            "e1*e4 = e5 - 2 e6",
            "e1*e5 = e6",
            "e2*e1 = e3 + e4 + lambda e5",
            "e2*e2 = e4",
            "e2*e3 = e5 - e6",
            "e2*e4 = e6",
            "e3*e1 = e4",
            "e3*e2 = e5",
            "e3*e3 = e6",
            "e4*e1 = e5 + e6",
            "e4*e2 = e6",
            "e5*e1 = e6",
        ],
        ann_dim: 1,
        cohomology: &[],
        constructions: &[ConstructionRecord {
            regime: &[],
            regime_excluded: &[],
            base: "N5_13",
            base_params: &[("lambda", "lambda")],
            cocycles: &[
                "(1 - 2*lambda) D13 - 2 D14 + D15 - D23 + D24 + D33 + D41 + D42 + D51",
            ],
        }],
    },
];

/// Identifications at excluded parameter values: the left family's formula
/// at the listed values is isomorphic to the right instantiation. The last
/// two rows record the sign symmetry within a family.
pub static EQUIVALENCES: &[EquivalenceClaim] = &[
    EquivalenceClaim {
        left: "N5_04",
        left_params: &[("lambda", "0")],
        right: "N5_02",
        right_params: &[("lambda", "0")],
        witness: &[],
    },
    EquivalenceClaim {
        left: "N6_16",
        left_params: &[("lambda", "3")],
        right: "N6_05",
        right_params: &[("lambda", "3")],
        witness: &["1", "-1/54", "0", "0", "0", "0"],
    },
    EquivalenceClaim {
        left: "N6_21",
        left_params: &[("lambda", "1"), ("mu", "2")],
        right: "N6_20",
        right_params: &[("lambda", "1"), ("mu", "2")],
        witness: &[],
    },
    EquivalenceClaim {
        left: "N6_23",
        left_params: &[("nu", "0")],
        right: "N6_22",
        right_params: &[("lambda", "1")],
        witness: &[],
    },
    EquivalenceClaim {
        left: "N6_25",
        left_params: &[("lambda", "0")],
        right: "N6_06",
        right_params: &[("lambda", "-2")],
        witness: &[],
    },
    EquivalenceClaim {
        left: "N6_26",
        left_params: &[("lambda", "0")],
        right: "N6_17",
        right_params: &[("alpha", "-2")],
        witness: &[],
    },
    EquivalenceClaim {
        left: "N6_35",
        left_params: &[("lambda", "0")],
        right: "N6_34",
        right_params: &[("lambda", "0")],
        witness: &[],
    },
    EquivalenceClaim {
        left: "N6_34",
        left_params: &[("lambda", "1")],
        right: "N6_34",
        right_params: &[("lambda", "-1")],
        witness: &[],
    },
    EquivalenceClaim {
        left: "N6_35",
        left_params: &[("lambda", "1")],
        right: "N6_35",
        right_params: &[("lambda", "-1")],
        witness: &[],
    },
];
