//! The full verification suite over the standard corpus. Each criterion
//! is exhaustive at its stated scale and reports one pass/fail line; the
//! CLI `selftest` subcommand and the acceptance integration test both run
//! exactly this code.

use ascheme_core::algebra::{self, alg_hom};
use ascheme_core::bridge;
use ascheme_core::closed;
use ascheme_core::corpus;
use ascheme_core::hopf;
use ascheme_core::morphism::{self, Morphism};
use ascheme_core::{Error, Group, Scheme};

use crate::formats;

#[derive(Clone, Debug)]
pub struct Criterion {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Criterion {
    fn ok(name: &'static str, detail: String) -> Criterion {
        Criterion { name, pass: true, detail }
    }

    fn fail(name: &'static str, detail: String) -> Criterion {
        Criterion { name, pass: false, detail }
    }
}

/// Admissible morphisms enumerated between all ordered corpus pairs with
/// at most 9 domain points, skipping pairs whose raw candidate count
/// exceeds the enumeration budget. Shared by several criteria.
struct MorphismPool {
    morphisms: Vec<Morphism>,
    pairs_enumerated: usize,
    pairs_skipped: usize,
}

fn enumerate_pool(schemes: &[Scheme]) -> Result<MorphismPool, Error> {
    let mut pool = MorphismPool { morphisms: Vec::new(), pairs_enumerated: 0, pairs_skipped: 0 };
    for dom in schemes {
        if dom.n() > 9 {
            continue;
        }
        for cod in schemes {
            match morphism::enumerate_morphisms(dom, cod, true) {
                Ok(ms) => {
                    pool.pairs_enumerated += 1;
                    pool.morphisms.extend(ms);
                }
                Err(Error::BudgetExceeded { .. }) => pool.pairs_skipped += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(pool)
}

pub fn run_acceptance() -> Vec<Criterion> {
    let schemes = corpus::corpus();
    let mut out = Vec::new();

    out.push(axioms(&schemes));
    out.push(thin_residue(&schemes));

    let pool = match enumerate_pool(&schemes) {
        Ok(p) => p,
        Err(e) => {
            out.push(Criterion::fail("first-isomorphism", format!("enumeration failed: {e}")));
            return out;
        }
    };
    out.push(first_isomorphism(&pool));
    out.push(relative_valency(&pool));
    out.push(pushforward_identity(&pool));
    out.push(functoriality(&pool, &schemes));
    out.push(adjunctions(&schemes));
    out.push(example_collapse());
    out.push(diagonal_dichotomy(&schemes));
    out.push(hopf_comodule(&schemes));
    out.push(round_trip(&schemes));
    out
}

/// 1. Every corpus scheme validates, valencies sum to the point count,
/// and the double-counting identity holds for all basis pairs.
fn axioms(schemes: &[Scheme]) -> Criterion {
    let name = "axioms";
    for s in schemes {
        match Scheme::from_color_matrix(&s.color_rows()) {
            Ok(rebuilt) if &rebuilt == s => {}
            _ => return Criterion::fail(name, format!("rebuild failed on {}-point scheme", s.n())),
        }
        let total: usize = (0..s.rank()).map(|r| s.valency(r)).sum();
        if total != s.n() {
            return Criterion::fail(name, format!("valencies sum to {total}, not {}", s.n()));
        }
        for p in 0..s.rank() {
            for q in 0..s.rank() {
                let lhs: usize = (0..s.rank()).map(|r| s.sc(p, q, r) * s.valency(r)).sum();
                if lhs != s.valency(p) * s.valency(q) {
                    return Criterion::fail(name, format!("double counting fails at ({p}, {q})"));
                }
            }
        }
    }
    Criterion::ok(name, format!("{} schemes", schemes.len()))
}

/// 2. Both thin-residue computations agree (the library cross-checks
/// internally) and the quotient by the residue is thin.
fn thin_residue(schemes: &[Scheme]) -> Criterion {
    let name = "thin-residue";
    for s in schemes {
        let residue = match closed::thin_residue(s) {
            Ok(r) => r,
            Err(e) => return Criterion::fail(name, format!("{e}")),
        };
        match closed::quotient(s, &residue) {
            Ok((q, _)) if q.is_thin() => {}
            Ok(_) => return Criterion::fail(name, "quotient by residue is not thin".into()),
            Err(e) => return Criterion::fail(name, format!("{e}")),
        }
    }
    Criterion::ok(name, format!("{} schemes, both construction routes agree", schemes.len()))
}

/// 3. Every enumerated admissible morphism factors as an inclusion after
/// an isomorphism after a projection, recomposing exactly.
fn first_isomorphism(pool: &MorphismPool) -> Criterion {
    let name = "first-isomorphism";
    for m in &pool.morphisms {
        if let Err(e) = m.factorize() {
            return Criterion::fail(name, format!("factorization failed: {e}"));
        }
    }
    Criterion::ok(
        name,
        format!(
            "{} morphisms over {} scheme pairs ({} pairs over budget)",
            pool.morphisms.len(),
            pool.pairs_enumerated,
            pool.pairs_skipped
        ),
    )
}

/// 4. Relative valencies agree across all three formulas (the library
/// cross-checks each call) and multiply along the factorization
/// composites.
fn relative_valency(pool: &MorphismPool) -> Criterion {
    let name = "relative-valency";
    let mut pairs = 0usize;
    for m in &pool.morphisms {
        for s in 0..m.dom().rank() {
            if let Err(e) = m.relative_valency(s) {
                return Criterion::fail(name, format!("{e}"));
            }
        }
        let Ok((pi, phibar, _)) = m.factorize() else {
            return Criterion::fail(name, "factorization failed".into());
        };
        let Ok(composed) = phibar.compose(&pi) else {
            return Criterion::fail(name, "composition failed".into());
        };
        for s in 0..m.dom().rank() {
            let lhs = composed.relative_valency(s);
            let rhs = pi
                .relative_valency(s)
                .and_then(|a| Ok(a * phibar.relative_valency(pi.apply_rel(s))?));
            match (lhs, rhs) {
                (Ok(a), Ok(b)) if a == b => {}
                _ => {
                    return Criterion::fail(
                        name,
                        format!("composition multiplicativity fails at relation {s}"),
                    )
                }
            }
        }
        pairs += 1;
    }
    Criterion::ok(name, format!("{pairs} morphisms, all relations"))
}

/// 5. The pushforward identity holds on every (p, q, t) triple of every
/// admissible morphism, and the induced algebra map verifies
/// multiplicative.
fn pushforward_identity(pool: &MorphismPool) -> Criterion {
    let name = "pushforward-identity";
    let mut triples = 0usize;
    for m in &pool.morphisms {
        match algebra::check_pushforward_identity(m) {
            Ok(None) => {}
            Ok(Some(w)) => return Criterion::fail(name, format!("fails at {w:?}")),
            Err(e) => return Criterion::fail(name, format!("{e}")),
        }
        if let Err(e) = alg_hom(m) {
            return Criterion::fail(name, format!("{e}"));
        }
        triples += m.dom().rank() * m.dom().rank() * m.cod().rank();
    }
    Criterion::ok(name, format!("{} morphisms, {triples} triples", pool.morphisms.len()))
}

/// 6. The algebra functor respects composition: against the factorization
/// composites of every pooled morphism, and against all composable pairs
/// among schemes with at most 4 points. It is also constant on algebraic
/// equivalence classes.
fn functoriality(pool: &MorphismPool, schemes: &[Scheme]) -> Criterion {
    let name = "functoriality";
    for m in &pool.morphisms {
        let Ok((pi, phibar, iota)) = m.factorize() else {
            return Criterion::fail(name, "factorization failed".into());
        };
        let chained = alg_hom(&iota)
            .and_then(|a| Ok(a.compose(&alg_hom(&phibar)?)?))
            .and_then(|a| Ok(a.compose(&alg_hom(&pi)?)?));
        match (alg_hom(m), chained) {
            (Ok(a), Ok(b)) if a == b => {}
            _ => return Criterion::fail(name, "factorization composite disagrees".into()),
        }
    }

    let small: Vec<&Scheme> = schemes.iter().filter(|s| s.n() <= 4).collect();
    let mut composites = 0usize;
    for a in &small {
        for b in &small {
            let Ok(fs) = morphism::enumerate_morphisms(a, b, true) else {
                return Criterion::fail(name, "enumeration failed".into());
            };
            if fs.is_empty() {
                continue;
            }
            for c in &small {
                let Ok(gs) = morphism::enumerate_morphisms(b, c, true) else {
                    return Criterion::fail(name, "enumeration failed".into());
                };
                for f in &fs {
                    for g in &gs {
                        let ok = g
                            .compose(f)
                            .and_then(|gf| alg_hom(&gf))
                            .and_then(|lhs| Ok(lhs == alg_hom(g)?.compose(&alg_hom(f)?)?));
                        if !matches!(ok, Ok(true)) {
                            return Criterion::fail(
                                name,
                                "composite pushforward disagrees".into(),
                            );
                        }
                        composites += 1;
                    }
                }
            }
            // constant on algebraic equivalence classes
            let Ok(classes) = morphism::alg_equivalence_classes(&fs) else {
                return Criterion::fail(name, "classification failed".into());
            };
            for class in classes {
                let Ok(first) = alg_hom(&fs[class[0]]) else {
                    return Criterion::fail(name, "pushforward failed".into());
                };
                for &i in &class[1..] {
                    if alg_hom(&fs[i]).ok().as_ref() != Some(&first) {
                        return Criterion::fail(name, "class members disagree".into());
                    }
                }
            }
        }
    }
    Criterion::ok(
        name,
        format!("{} factorizations, {composites} explicit composites", pool.morphisms.len()),
    )
}

/// 7. Both adjunctions verify extensionally for every group of order at
/// most 6 against every corpus scheme with at most 6 points.
fn adjunctions(schemes: &[Scheme]) -> Criterion {
    let name = "adjunctions";
    let groups: Vec<Group> =
        corpus::small_groups().into_iter().filter(|g| g.order() <= 6).collect();
    let targets: Vec<&Scheme> = schemes.iter().filter(|s| s.n() <= 6).collect();
    let mut pairs = 0usize;
    for g in &groups {
        for t in &targets {
            match bridge::check_rad_adjunction(g, t) {
                Ok(r) if r.all_hold() => {}
                Ok(r) => {
                    return Criterion::fail(
                        name,
                        format!("thin-radical adjunction fails for |G|={}, n={}: {r:?}", g.order(), t.n()),
                    )
                }
                Err(e) => return Criterion::fail(name, format!("{e}")),
            }
            match bridge::check_quo_adjunction(t, g) {
                Ok(r) if r.all_hold() => {}
                Ok(r) => {
                    return Criterion::fail(
                        name,
                        format!("thin-quotient adjunction fails for n={}, |G|={}: {r:?}", t.n(), g.order()),
                    )
                }
                Err(e) => return Criterion::fail(name, format!("{e}")),
            }
            pairs += 1;
        }
    }
    Criterion::ok(name, format!("{pairs} (group, scheme) pairs, both adjunctions"))
}

/// 8. The point-identity collapse from the 3-point thin scheme onto the
/// complete 3-point scheme is a morphism but not admissible, with a
/// genuine witness.
fn example_collapse() -> Criterion {
    let name = "collapse-example";
    let c3 = ascheme_core::group_scheme(&Group::cyclic(3));
    let k3 = Scheme::complete(3).expect("3 points");
    let Ok(phi) = Morphism::from_point_map(&c3, &k3, vec![0, 1, 2]) else {
        return Criterion::fail(name, "collapse is not even a morphism".into());
    };
    if phi.is_admissible() {
        return Criterion::fail(name, "collapse unexpectedly admissible".into());
    }
    let Some((x, y, s)) = phi.admissibility_witness() else {
        return Criterion::fail(name, "no witness recorded".into());
    };
    let genuine = k3.color(phi.apply(x), y) == phi.apply_rel(s)
        && (0..3).all(|xp| phi.apply(xp) != y || c3.color(x, xp) != s);
    if !genuine {
        return Criterion::fail(name, format!("witness ({x}, {y}, {s}) is not genuine"));
    }
    Criterion::ok(name, format!("morphism yes, admissible no, witness ({x}, {y}, {s})"))
}

/// 9. Diagonal admissibility coincides with thinness on every corpus
/// scheme, and the naive comultiplication on the complete 3-point scheme
/// fails multiplicativity at a concrete basis pair.
fn diagonal_dichotomy(schemes: &[Scheme]) -> Criterion {
    let name = "diagonal-dichotomy";
    for s in schemes {
        if hopf::check_diagonal_admissibility(s) != s.is_thin() {
            return Criterion::fail(name, format!("mismatch on {}-point scheme", s.n()));
        }
        if hopf::naive_diagonal_failure(s).is_some() == s.is_thin() {
            return Criterion::fail(name, "naive-diagonal control disagrees with thinness".into());
        }
    }
    let k3 = Scheme::complete(3).expect("3 points");
    match hopf::naive_diagonal_failure(&k3) {
        Some(pair) => {
            Criterion::ok(name, format!("{} schemes; naive diagonal fails at {pair:?}", schemes.len()))
        }
        None => Criterion::fail(name, "no failing pair on the rank-2 control".into()),
    }
}

/// 10. All Hopf axioms and the group-algebra identification hold on every
/// thin corpus scheme; the canonical coaction satisfies all comodule
/// equations, including the tensor factorization, on every corpus scheme.
fn hopf_comodule(schemes: &[Scheme]) -> Criterion {
    let name = "hopf-comodule";
    let mut thin = 0usize;
    for s in schemes {
        if s.is_thin() {
            match hopf::hopf_structure(s) {
                Ok(h) if h.checks.all_hold() => thin += 1,
                Ok(h) => return Criterion::fail(name, format!("Hopf checks fail: {:?}", h.checks)),
                Err(e) => return Criterion::fail(name, format!("{e}")),
            }
        }
        match hopf::canonical_coaction(s) {
            Ok(c) if c.checks.all_hold() => {}
            Ok(c) => return Criterion::fail(name, format!("comodule checks fail: {:?}", c.checks)),
            Err(e) => return Criterion::fail(name, format!("{e}")),
        }
    }
    Criterion::ok(name, format!("{thin} thin schemes, {} coactions", schemes.len()))
}

/// 11. Every corpus scheme (including all products, quotients and
/// subschemes) survives emit -> parse -> emit byte-identically.
fn round_trip(schemes: &[Scheme]) -> Criterion {
    let name = "round-trip";
    for s in schemes {
        let text = formats::emit_scheme(s);
        match formats::parse_scheme(&text) {
            Ok(parsed) if &parsed == s && formats::emit_scheme(&parsed) == text => {}
            Ok(_) => return Criterion::fail(name, "parse/emit not byte-identical".into()),
            Err(e) => return Criterion::fail(name, format!("{e}")),
        }
    }
    Criterion::ok(name, format!("{} schemes", schemes.len()))
}
