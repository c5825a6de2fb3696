//! Exhaustive and seeded-random verification sweeps.
//!
//! Each check compares two independently computed quantities exactly. Sweeps
//! run in parallel but collect results in enumeration order, so reports are
//! deterministic.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Basis, BasisIndex, Element, Family, Tensor};
use crate::composition::{compositions_of, Composition, SkewShape};
use crate::convert::{canonical, to_f, to_m};
use crate::error::Error;
use crate::immaculate::{degree_tables, dual_immaculate_f, immaculate_of, rs_dual_immaculate_f};
use crate::pairing::{self, pair};
use crate::{lr, pieri};
use crate::{nsym, qsym};

/// Seed of the random lemma sweep.
pub const LEMMA_SEED: u64 = 0x5eed_1e55;

const MAX_LISTED: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn new(name: &str) -> Self {
        Report {
            name: name.to_string(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    fn merge_all(name: &str, parts: impl IntoIterator<Item = Report>) -> Report {
        let mut r = Report::new(name);
        for p in parts {
            r.absorb(p);
        }
        r
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{}: {} checks, {}", self.name, self.checked, verdict)?;
        for line in self.failures.iter().take(MAX_LISTED) {
            write!(f, "\n  {line}")?;
        }
        if self.failures.len() > MAX_LISTED {
            write!(f, "\n  ... {} more", self.failures.len() - MAX_LISTED)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Duality,
    Psi,
    Lemmas,
    SkewPieri,
    Coefficients,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Duality,
        Suite::Psi,
        Suite::Lemmas,
        Suite::SkewPieri,
        Suite::Coefficients,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::Psi => "psi",
            Suite::Lemmas => "lemmas",
            Suite::SkewPieri => "skew-pieri",
            Suite::Coefficients => "coefficients",
        }
    }

    pub fn run(self, max: usize) -> Vec<Report> {
        match self {
            Suite::Duality => vec![duality(max), coproduct_compatibility(max)],
            Suite::Psi => vec![psi_structure(max)],
            Suite::Lemmas => vec![
                antipode_identity(max),
                random_lemmas(max.min(4), 128, LEMMA_SEED),
                immaculate_contraction(max),
                generic_lr(max.min(4)),
            ],
            Suite::SkewPieri => vec![
                skew_pieri_sweep(max, 3),
                skew_pieri_rs_sweep(max, 3),
                strip_columns(max),
            ],
            Suite::Coefficients => vec![
                coefficient_agreement(max, 3),
                left_pieri_rules(max),
                adjointness_bridge(max.min(5), 2),
            ],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite {s:?}")))
    }
}

fn compositions_up_to(max: usize) -> Vec<Composition> {
    (0..=max).flat_map(compositions_of).collect()
}

fn inner_shapes(alpha: &Composition) -> Vec<Composition> {
    compositions_up_to(alpha.size())
        .into_iter()
        .filter(|g| alpha.contains(g))
        .collect()
}

fn skew_shapes_up_to(max: usize) -> Vec<SkewShape> {
    compositions_up_to(max)
        .into_iter()
        .flat_map(|a| {
            inner_shapes(&a)
                .into_iter()
                .map(move |g| SkewShape::new(a.clone(), g).expect("contained"))
        })
        .collect()
}

/// `⟨𝔖*_α, I_β⟩ = δ_{αβ}` and `⟨ℛ𝔖*_α, ℛI_β⟩ = δ_{αβ}` for `α, β ⊨ n ≤ max`.
pub fn duality(max: usize) -> Report {
    let parts: Vec<Report> = (0..=max)
        .into_par_iter()
        .map(|n| {
            let mut r = Report::new("duality");
            let t = degree_tables(n);
            for a in &t.compositions {
                let (d, rd) = (t.dual_immaculate(a), t.rs_dual_immaculate(a));
                for b in &t.compositions {
                    let want = i64::from(a == b);
                    let got = pair(&d, &t.immaculate(b)).unwrap();
                    r.check(got == want, || format!("<S*{a}, I{b}> = {got}"));
                    let got = pair(&rd, &t.rs_immaculate(b)).unwrap();
                    r.check(got == want, || format!("<RS*{a}, RI{b}> = {got}"));
                }
            }
            r
        })
        .collect();
    Report::merge_all("duality", parts)
}

fn tensor_to_m(t: &Tensor) -> Tensor {
    let leg = |k: &BasisIndex| to_m(&Element::term(k.clone(), 1));
    t.map_legs(leg, leg).expect("QSym legs")
}

/// `Δ𝔖*_α = Σ_β 𝔖*_β ⊗ 𝔖*_{α/β}` with skew functions from tableaux.
pub fn coproduct_compatibility(max: usize) -> Report {
    let alphas = compositions_up_to(max.min(6));
    let parts: Vec<Report> = alphas
        .par_iter()
        .map(|alpha| {
            let mut r = Report::new("coproduct");
            let direct =
                pairing::coproduct(&dual_immaculate_f(&SkewShape::straight(alpha.clone())))
                    .unwrap();
            let mut skew = Tensor::zero();
            for beta in inner_shapes(alpha) {
                let left = dual_immaculate_f(&SkewShape::straight(beta.clone()));
                let right = dual_immaculate_f(&SkewShape::new(alpha.clone(), beta).unwrap());
                skew.add_assign_scaled(&Tensor::from_elements(&left, &right), 1);
            }
            r.check(tensor_to_m(&direct) == tensor_to_m(&skew), || {
                format!("coproduct of S*{alpha}")
            });
            r
        })
        .collect();
    Report::merge_all("coproduct compatibility", parts)
}

/// `ψ` is an involutive algebra map on QSym and NSym, `ψ(𝔖*_{α/β}) = ℛ𝔖*_{α/β}`,
/// and `ψ(E_α) = H_α` round-trips.
pub fn psi_structure(max: usize) -> Report {
    let mut r = Report::new("psi");
    let small = compositions_up_to(max.min(5));
    for a in &small {
        let fa = Element::basis(Basis::F, a.clone());
        let once = qsym::psi(&fa).unwrap();
        r.check(qsym::psi(&once).unwrap() == fa, || format!("psi^2 F{a}"));
        for b in &small {
            if a.size() + b.size() > max.min(5) {
                continue;
            }
            let fb = Element::basis(Basis::F, b.clone());
            let lhs = qsym::psi(&qsym::product_f(&fa, &fb).unwrap()).unwrap();
            let rhs = qsym::product_f(&once, &qsym::psi(&fb).unwrap()).unwrap();
            r.check(lhs == rhs, || format!("psi(F{a} F{b})"));

            let ha = Element::basis(Basis::H, a.clone());
            let hb = Element::basis(Basis::H, b.clone());
            let lhs =
                nsym::to_h(&nsym::psi_n(&nsym::product_h(&ha, &hb).unwrap()).unwrap()).unwrap();
            let rhs =
                nsym::product_h(&nsym::psi_n(&ha).unwrap(), &nsym::psi_n(&hb).unwrap()).unwrap();
            r.check(lhs == rhs, || format!("psi(H{a} H{b})"));
        }
        let e = Element::basis(Basis::E, a.clone());
        let h = nsym::psi_n(&e).unwrap();
        r.check(h == Element::basis(Basis::H, a.clone()), || {
            format!("psi(E{a})")
        });
        r.check(nsym::psi_n(&h).unwrap() == e, || format!("psi(H{a})"));
        let via_h = nsym::to_h(&nsym::psi_n(&nsym::e_to_h(a)).unwrap()).unwrap();
        r.check(via_h == Element::basis(Basis::H, a.clone()), || {
            format!("psi of E{a} written in H")
        });
    }
    for shape in skew_shapes_up_to(max.min(6)) {
        let lhs = qsym::psi(&dual_immaculate_f(&shape)).unwrap();
        r.check(lhs == rs_dual_immaculate_f(&shape), || {
            format!("psi(S*{shape})")
        });
    }
    r
}

/// `Σ S(h_1) h_2 = ε(h) 1 = Σ h_1 S(h_2)` on `F_α` and `H_α`, `|α| ≤ max`.
pub fn antipode_identity(max: usize) -> Report {
    let comps = compositions_up_to(max.min(6));
    let parts: Vec<Report> = comps
        .par_iter()
        .map(|a| {
            let mut r = Report::new("antipode");
            for basis in [Basis::F, Basis::H] {
                let x = Element::basis(basis, a.clone());
                r.check(pairing::check_antipode_identity(&x).unwrap(), || {
                    format!("antipode identity on {x}")
                });
            }
            r
        })
        .collect();
    Report::merge_all("antipode identity", parts)
}

/// Adjointness and the right-action lemmas on `count` random triples of
/// degree `≤ max`, with NSym carrying the coproduct. With QSym acting,
/// adjointness and the general product identities are checked on random
/// elements, and the symmetric-leg forms on the rows `F_(s)`.
pub fn random_lemmas(max: usize, count: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new("lemmas");
    for i in 0..count {
        let h = pairing::random_element(&mut rng, Family::NSym, max);
        let g = pairing::random_element(&mut rng, Family::NSym, max);
        let a = pairing::random_element(&mut rng, Family::QSym, max);
        let b = pairing::random_element(&mut rng, Family::QSym, max);
        let ctx = || format!("#{i}: h={h} g={g} a={a} b={b}");
        r.check(pairing::check_adjointness(&h, &g, &a, &b).unwrap(), || {
            format!("adjointness (NSym acting) {}", ctx())
        });
        r.check(pairing::check_adjointness(&a, &b, &h, &g).unwrap(), || {
            format!("adjointness (QSym acting) {}", ctx())
        });
        r.check(
            pairing::check_lemma_rightactprod(&h, &a, &b).unwrap(),
            || format!("product action {}", ctx()),
        );
        r.check(pairing::check_lemma_id(&h, &a).unwrap(), || {
            format!("unit action {}", ctx())
        });
        r.check(pairing::check_lemma_product(&h, &a, &b).unwrap(), || {
            format!("a(h <- b) {}", ctx())
        });
        r.check(pairing::check_lemma_raction(&h, &g, &a).unwrap(), || {
            format!("h(a <- g) {}", ctx())
        });
        // QSym acting: the general identities, and the symmetric-leg forms
        // with the row functions F_(s) used by the skew Pieri rule
        let q = pairing::random_element(&mut rng, Family::QSym, max);
        r.check(pairing::check_product_identity(&q, &h, &g).unwrap(), || {
            format!("a(q <- b) q={q} {}", ctx())
        });
        r.check(pairing::check_raction_identity(&q, &a, &h).unwrap(), || {
            format!("q(a <- g) q={q} {}", ctx())
        });
        r.check(pairing::check_product_identity(&h, &a, &b).unwrap(), || {
            format!("a(h <- b), general form {}", ctx())
        });
        let row = Element::basis(Basis::F, Composition::row(i % (max + 1)));
        r.check(pairing::check_lemma_product(&row, &h, &g).unwrap(), || {
            format!("a(F_(s) <- b) {}", ctx())
        });
        r.check(pairing::check_lemma_raction(&row, &q, &h).unwrap(), || {
            format!("F_(s)(a <- g) {}", ctx())
        });
    }
    r
}

/// `I_γ ↽ 𝔖*_α = 𝔖*_{α/γ}` in the `F` basis for `γ ⊆ α`, `|α| ≤ max`.
pub fn immaculate_contraction(max: usize) -> Report {
    let alphas = compositions_up_to(max.min(6));
    let parts: Vec<Report> = alphas
        .par_iter()
        .map(|alpha| {
            let mut r = Report::new("contraction");
            let s = Element::basis(Basis::DualImmaculate, alpha.clone());
            for gamma in inner_shapes(alpha) {
                let lhs = to_f(&pairing::right_harpoon_on_a(&immaculate_of(&gamma), &s).unwrap())
                    .unwrap();
                let rhs = dual_immaculate_f(&SkewShape::new(alpha.clone(), gamma.clone()).unwrap());
                r.check(lhs == rhs, || format!("I{gamma} <- S*{alpha}"));
            }
            r
        })
        .collect();
    Report::merge_all("immaculate contraction", parts)
}

/// The right-action skew LR expansion against direct products, with `L` the
/// ribbon basis and with `L = F`, for every pair of skew shapes of total size
/// `≤ max`. The swapped-leg form is checked with `L = F` and a one-row left
/// factor, the case the skew Pieri rule uses.
pub fn generic_lr(max: usize) -> Report {
    let shapes: Vec<SkewShape> = skew_shapes_up_to(max);
    let parts: Vec<Report> = shapes
        .par_iter()
        .map(|left| {
            let mut r = Report::new("generic lr");
            let x = (left.outer(), left.inner());
            for right in &shapes {
                if left.size() + right.size() > max {
                    continue;
                }
                let y = (right.outer(), right.inner());
                let direct = lr::skew_product(&lr::Ribbon, x, y).unwrap();
                let expanded = lr::skew_lr_expansion(&lr::Ribbon, x, y).unwrap();
                r.check(direct == expanded, || format!("R{left} * R{right}"));
                let direct = lr::skew_product(&lr::Fundamental, x, y).unwrap();
                let expanded = lr::skew_lr_expansion(&lr::Fundamental, x, y).unwrap();
                r.check(direct == expanded, || format!("F{left} * F{right}"));
                if left.inner().is_empty() && left.outer().len() <= 1 {
                    let swapped = lr::skew_lr_expansion_swapped(&lr::Fundamental, x, y).unwrap();
                    r.check(direct == swapped, || format!("swapped F{left} * F{right}"));
                }
            }
            r
        })
        .collect();
    Report::merge_all("generic skew LR", parts)
}

/// One check per `(α/γ, s)`: F-expansion of [`pieri::skew_pieri`] equals the
/// direct product, and the output is multiplicity-free up to sign.
pub fn skew_pieri_sweep(max: usize, s_max: usize) -> Report {
    skew_sweep(max, s_max, false)
}

/// The row-strict rule against `F_{(1^s)} · ℛ𝔖*_{α/γ}`, plus the `ψ` image.
pub fn skew_pieri_rs_sweep(max: usize, s_max: usize) -> Report {
    skew_sweep(max, s_max, true)
}

fn skew_sweep(max: usize, s_max: usize, row_strict: bool) -> Report {
    let shapes = skew_shapes_up_to(max);
    let name = if row_strict {
        "row-strict skew pieri"
    } else {
        "skew pieri"
    };
    let parts: Vec<Report> = shapes
        .par_iter()
        .map(|shape| {
            let mut r = Report::new(name);
            for s in 1..=s_max {
                if row_strict {
                    let out = pieri::skew_pieri_rs(s, shape);
                    let f = to_f(&out).unwrap();
                    r.check(f == pieri::skew_pieri_rs_oracle(s, shape), || {
                        format!("s={s} shape={shape}")
                    });
                    let psi_image =
                        qsym::psi(&to_f(&pieri::skew_pieri(s, shape)).unwrap()).unwrap();
                    r.check(psi_image == f, || format!("psi image s={s} shape={shape}"));
                } else {
                    let out = pieri::skew_pieri(s, shape);
                    r.check(
                        to_f(&out).unwrap() == pieri::skew_pieri_oracle(s, shape),
                        || format!("s={s} shape={shape}: {out}"),
                    );
                    r.check(pieri::multiplicity_check(&out), || {
                        format!("multiplicity s={s} shape={shape}: {out}")
                    });
                }
            }
            r
        })
        .collect();
    Report::merge_all(name, parts)
}

/// Straightened strip removals equal `b^γ_{(1^r),τ} = ⟨I_γ, F_{(1^r)} 𝔖*_τ⟩`.
pub fn strip_columns(max: usize) -> Report {
    let gammas = compositions_up_to(max.min(6));
    let parts: Vec<Report> = gammas
        .par_iter()
        .map(|gamma| {
            let mut r = Report::new("strips");
            let i_gamma = immaculate_of(gamma);
            for k in 0..=gamma.len() {
                let column: Vec<(Composition, i64)> = pieri::vertical_strip_column(gamma, k);
                let col = Composition::column(k);
                for tau in compositions_of(gamma.size() - k) {
                    let prod = qsym::product_f(
                        &Element::basis(Basis::F, col.clone()),
                        &dual_immaculate_f(&SkewShape::straight(tau.clone())),
                    )
                    .unwrap();
                    let want = pair(&i_gamma, &prod).unwrap();
                    let got = column
                        .iter()
                        .find(|(t, _)| *t == tau)
                        .map_or(0, |(_, c)| *c);
                    r.check(got == want, || {
                        format!("gamma={gamma} r={k} tau={tau}: {got} vs {want}")
                    });
                }
            }
            r
        })
        .collect();
    Report::merge_all("strip removals", parts)
}

/// `c^γ_{s,α}` against the oracle for every `|α| ≤ max`, `0 ≤ s ≤ s_max`.
pub fn coefficient_agreement(max: usize, s_max: usize) -> Report {
    let pairs: Vec<(Composition, usize)> = (0..=s_max)
        .flat_map(|s| {
            compositions_up_to(max.saturating_sub(s))
                .into_iter()
                .filter(move |_| s <= max)
                .map(move |g| (g, s))
        })
        .collect();
    let parts: Vec<Report> = pairs
        .par_iter()
        .map(|(gamma, s)| {
            let mut r = Report::new("coefficients");
            let row = if *s == 0 {
                Element::basis(Basis::DualImmaculate, gamma.clone())
            } else {
                pieri::pieri_row_oracle(gamma, *s)
            };
            for alpha in compositions_of(gamma.size() + s) {
                let c = pieri::pieri_coeff(gamma, *s, &alpha).unwrap().value;
                let o = row.coeff_of(Basis::DualImmaculate, &alpha);
                r.check(c == o, || {
                    format!("gamma={gamma} s={s} alpha={alpha}: {c} vs {o}")
                });
            }
            r
        })
        .collect();
    Report::merge_all("pieri coefficients", parts)
}

fn pairs_immaculate(e: &Element, row_strict: bool) -> Element {
    let mut out = Element::zero();
    let h = canonical(e).unwrap();
    let tag = if row_strict {
        Basis::RsImmaculate
    } else {
        Basis::Immaculate
    };
    for n in 0..=h.max_degree() {
        let part = h.component(n);
        if part.is_zero() {
            continue;
        }
        let t = degree_tables(n);
        for c in &t.compositions {
            let dual = if row_strict {
                t.rs_dual_immaculate(c)
            } else {
                t.dual_immaculate(c)
            };
            out.add_term(BasisIndex::new(tag, c.clone()), pair(&part, &dual).unwrap());
        }
    }
    out
}

/// The four left Pieri rules against products computed in the ambient bases.
pub fn left_pieri_rules(max: usize) -> Report {
    let alphas = compositions_up_to(max.saturating_sub(1));
    let parts: Vec<Report> = alphas
        .par_iter()
        .map(|alpha| {
            let mut r = Report::new("left pieri");
            for m in 1..=max - alpha.size() {
                let hm = Element::basis(Basis::H, Composition::row(m));
                let em = Element::basis(Basis::E, Composition::row(m));
                let prod = nsym::product_h(&hm, &immaculate_of(alpha)).unwrap();
                r.check(
                    pairs_immaculate(&prod, false) == pieri::left_pieri_h_immaculate(m, alpha),
                    || format!("H_{m} I{alpha}"),
                );
                let rs = crate::immaculate::rs_immaculate_of(alpha);
                let prod = nsym::product_h(&em, &rs).unwrap();
                r.check(
                    pairs_immaculate(&prod, true) == pieri::left_pieri_e_rs_immaculate(m, alpha),
                    || format!("E_{m} RI{alpha}"),
                );

                let s = m;
                let shape = SkewShape::straight(alpha.clone());
                let prod = qsym::product_f(
                    &Element::basis(Basis::F, Composition::row(s)),
                    &dual_immaculate_f(&shape),
                )
                .unwrap();
                r.check(
                    to_f(&pieri::left_pieri_f_dual_immaculate(s, alpha)).unwrap() == prod,
                    || format!("F_({s}) S*{alpha}"),
                );
                let prod = qsym::product_f(
                    &Element::basis(Basis::F, Composition::column(s)),
                    &rs_dual_immaculate_f(&shape),
                )
                .unwrap();
                r.check(
                    to_f(&pieri::left_pieri_f1s_rs_dual_immaculate(s, alpha)).unwrap() == prod,
                    || format!("F_(1^{s}) RS*{alpha}"),
                );
            }
            r
        })
        .collect();
    Report::merge_all("left pieri rules", parts)
}

/// `⟨I_α, F_{(s)} 𝔖*_β⟩ = ⟨H_r I_α, 𝔖*_{(s+r,β)}⟩` for `|α| ≤ max`, `1 ≤ r ≤ r_max`.
pub fn adjointness_bridge(max: usize, r_max: usize) -> Report {
    let mut rep = Report::new("adjointness bridge");
    for alpha in compositions_up_to(max) {
        let i_alpha = immaculate_of(&alpha);
        for s in 0..=alpha.size() {
            for beta in compositions_of(alpha.size() - s) {
                let lhs_q = qsym::product_f(
                    &Element::basis(Basis::F, Composition::row(s)),
                    &dual_immaculate_f(&SkewShape::straight(beta.clone())),
                )
                .unwrap();
                let lhs = pair(&i_alpha, &lhs_q).unwrap();
                for r in 1..=r_max {
                    let hr = Element::basis(Basis::H, Composition::row(r));
                    let left = nsym::product_h(&hr, &i_alpha).unwrap();
                    let big = Composition::row(s + r).concat(&beta);
                    let rhs = pair(&left, &dual_immaculate_f(&SkewShape::straight(big))).unwrap();
                    rep.check(lhs == rhs, || {
                        format!("alpha={alpha} s={s} beta={beta} r={r}")
                    });
                }
            }
        }
    }
    rep
}

/// `evaluate_truncated` certifies `monomial_product`, `f_to_m` and
/// `fundamental_product` on all pairs of total degree `≤ max`.
pub fn evaluation_oracle(max: usize) -> Report {
    let comps = compositions_up_to(max);
    let parts: Vec<Report> = comps
        .par_iter()
        .map(|a| {
            let mut r = Report::new("evaluation");
            let vars = max.max(1);
            let ev = |e: &Element| qsym::evaluate_truncated(e, vars).unwrap();
            let fa = Element::basis(Basis::F, a.clone());
            r.check(ev(&fa) == ev(&qsym::f_to_m(a)), || format!("F{a} in M"));
            let ma = Element::basis(Basis::M, a.clone());
            for b in &comps {
                if a.size() + b.size() > max {
                    continue;
                }
                let mb = Element::basis(Basis::M, b.clone());
                let fb = Element::basis(Basis::F, b.clone());
                let prod = qsym::multiply_polynomials(&ev(&ma), &ev(&mb));
                r.check(ev(&qsym::monomial_product(a, b)) == prod, || {
                    format!("M{a} M{b}")
                });
                let prod = qsym::multiply_polynomials(&ev(&fa), &ev(&fb));
                r.check(ev(&qsym::fundamental_product(a, b)) == prod, || {
                    format!("F{a} F{b}")
                });
            }
            r
        })
        .collect();
    Report::merge_all("evaluation oracle", parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse() {
        assert_eq!("skew-pieri".parse::<Suite>().unwrap(), Suite::SkewPieri);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        for r in [
            duality(3),
            psi_structure(3),
            antipode_identity(3),
            immaculate_contraction(3),
            skew_pieri_sweep(3, 2),
            strip_columns(4),
            coefficient_agreement(4, 2),
            left_pieri_rules(4),
            evaluation_oracle(3),
            random_lemmas(3, 16, LEMMA_SEED),
            generic_lr(3),
        ] {
            assert!(r.passed(), "{r}");
        }
    }
}
