//! Subcommand implementations. Every command produces a `RunReport`;
//! `main` renders it (human or JSON) and maps the outcome to an exit
//! code: 0 all checks pass, 1 a check failed, 2 input error.

use std::fs;

use ascheme_core::algebra::{self, alg_hom};
use ascheme_core::bridge;
use ascheme_core::closed::{self, ClosedSubset};
use ascheme_core::hopf;
use ascheme_core::morphism::{self, Morphism, DEFAULT_ENUMERATION_BUDGET};
use ascheme_core::{Error, RelSet, Scheme};
use clap::{Parser, Subcommand};
use serde_json::json;

use crate::acceptance;
use crate::error::{CliError, Result};
use crate::formats;
use crate::report::{matrix_json, rational_string, RunReport};

#[derive(Parser)]
#[command(name = "ascheme", version, about = "Exact verification of association-scheme structure")]
pub struct Cli {
    /// Emit the report as JSON instead of human-readable text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Validate a scheme file against the four axioms
    Validate { file: String },
    /// Valencies, thin radical/residue and closed subsets of a scheme
    Info { file: String },
    /// Build the thin scheme of a group given by its Cayley table
    GroupScheme { file: String },
    /// Direct product of two schemes
    Product { a: String, b: String },
    /// Quotient by a closed subset (given as comma-separated relation indices)
    Quotient {
        file: String,
        #[arg(long)]
        closed: String,
    },
    /// Subscheme on the coset of a closed subset at a point
    Subscheme {
        file: String,
        #[arg(long)]
        closed: String,
        #[arg(long, default_value_t = 0)]
        point: usize,
    },
    /// Whether a point map is a morphism, and whether it is admissible
    CheckMorphism { dom: String, cod: String, mor: String },
    /// First-isomorphism factorization of an admissible morphism
    Factorize { dom: String, cod: String, mor: String },
    /// All (admissible) morphisms between two schemes
    EnumerateMorphisms {
        dom: String,
        cod: String,
        #[arg(long)]
        admissible: bool,
    },
    /// The group of thin relations
    RadGroup { file: String },
    /// The group of the quotient by the thin residue
    QuoGroup { file: String },
    /// Extensional adjunction check between a group and a scheme
    AdjunctionCheck {
        #[arg(long, conflicts_with = "quo")]
        rad: bool,
        #[arg(long)]
        quo: bool,
        group: String,
        scheme: String,
    },
    /// Pushforward identity and functoriality for an admissible morphism
    AlgebraCheck { dom: String, cod: String, mor: String },
    /// Hopf axioms on the adjacency algebra of a thin scheme
    HopfCheck { file: String },
    /// Comodule-algebra axioms for a coaction (canonical if no morphism given)
    ComoduleCheck {
        scheme: String,
        cod: Option<String>,
        mor: Option<String>,
    },
    /// Run the full verification suite over the standard corpus
    Selftest,
}

pub fn run(cli: &Cli) -> Result<RunReport> {
    let mut report;
    match &cli.command {
        Command::Validate { file } => {
            report = RunReport::new("validate");
            let text = read(file, &mut report)?;
            match formats::parse_scheme(&text) {
                Ok(s) => {
                    report.check("scheme-axioms", true, None);
                    report.data(scheme_summary(&s));
                }
                Err(CliError::Core(e)) => report.check("scheme-axioms", false, Some(e.to_string())),
                Err(parse) => return Err(parse.in_file(file)),
            }
        }
        Command::Info { file } => {
            report = RunReport::new("info");
            let s = read_scheme(file, &mut report)?;
            report.check("scheme-axioms", true, None);
            let mut data = scheme_summary(&s);
            let obj = data.as_object_mut().expect("summary is an object");
            obj.insert("star".into(), json!((0..s.rank()).map(|r| s.star(r)).collect::<Vec<_>>()));
            obj.insert("thin_radical".into(), json!(closed::thin_radical(&s).indices()));
            obj.insert("thin_residue".into(), json!(closed::thin_residue(&s)?.indices()));
            match closed::enumerate_closed_subsets(&s) {
                Ok(subsets) => {
                    let list: Vec<_> = subsets
                        .iter()
                        .map(|t| {
                            json!({
                                "relations": t.indices(),
                                "normal": t.is_normal(),
                                "strongly_normal": t.is_strongly_normal(),
                            })
                        })
                        .collect();
                    obj.insert("closed_subsets".into(), json!(list));
                }
                Err(Error::RankTooLarge { .. }) => {
                    obj.insert("closed_subsets".into(), json!("rank above enumeration bound"));
                }
                Err(e) => return Err(e.into()),
            }
            report.data(data);
        }
        Command::GroupScheme { file } => {
            report = RunReport::new("group-scheme");
            let text = read(file, &mut report)?;
            match formats::parse_group(&text) {
                Ok(g) => {
                    report.check("group-axioms", true, None);
                    let s = ascheme_core::group_scheme(&g);
                    report.data(json!({
                        "order": g.order(),
                        "scheme_asc": formats::emit_scheme(&s),
                    }));
                }
                Err(CliError::Core(e)) => report.check("group-axioms", false, Some(e.to_string())),
                Err(parse) => return Err(parse.in_file(file)),
            }
        }
        Command::Product { a, b } => {
            report = RunReport::new("product");
            let sa = read_scheme(a, &mut report)?;
            let sb = read_scheme(b, &mut report)?;
            let p = sa.direct_product(&sb);
            report.check("product-valid", true, None);
            report.data(json!({
                "n": p.n(),
                "rank": p.rank(),
                "scheme_asc": formats::emit_scheme(&p),
            }));
        }
        Command::Quotient { file, closed: idx } => {
            report = RunReport::new("quotient");
            let s = read_scheme(file, &mut report)?;
            let (t, was_closed) = closed_from_arg(&s, idx)?;
            let (q, pi) = closed::quotient(&s, &t)?;
            report.check("quotient-valid", true, None);
            report.data(json!({
                "input_was_closed": was_closed,
                "closed_subset": t.indices(),
                "normal": t.is_normal(),
                "projection_admissible": pi.is_admissible(),
                "projection": pi.point_map(),
                "relation_classes": (0..s.rank()).map(|r| pi.apply_rel(r)).collect::<Vec<_>>(),
                "scheme_asc": formats::emit_scheme(&q),
            }));
        }
        Command::Subscheme { file, closed: idx, point } => {
            report = RunReport::new("subscheme");
            let s = read_scheme(file, &mut report)?;
            let (t, was_closed) = closed_from_arg(&s, idx)?;
            let (sub, inclusion) = closed::subscheme(&s, &t, *point)?;
            report.check("subscheme-valid", true, None);
            report.data(json!({
                "input_was_closed": was_closed,
                "closed_subset": t.indices(),
                "points": inclusion.point_map(),
                "scheme_asc": formats::emit_scheme(&sub),
            }));
        }
        Command::CheckMorphism { dom, cod, mor } => {
            report = RunReport::new("check-morphism");
            let (sd, sc, map) = read_morphism_files(dom, cod, mor, &mut report)?;
            match Morphism::from_point_map(&sd, &sc, map) {
                Ok(phi) => {
                    report.check("morphism", true, None);
                    let mut data = json!({
                        "rel_map": phi.rel_map(),
                        "admissible": phi.is_admissible(),
                        "kernel": phi.kernel().indices(),
                    });
                    let obj = data.as_object_mut().expect("object");
                    if let Some(w) = phi.admissibility_witness() {
                        obj.insert("admissibility_witness".into(), json!({
                            "point": w.0, "target": w.1, "relation": w.2,
                        }));
                    } else {
                        let relvals: Vec<usize> = (0..sd.rank())
                            .map(|s| phi.relative_valency(s))
                            .collect::<std::result::Result<_, _>>()?;
                        obj.insert("relative_valencies".into(), json!(relvals));
                        let (pi, phibar, _) = phi.factorize()?;
                        obj.insert("factorization".into(), json!({
                            "kernel_size": phi.kernel().indices().len(),
                            "quotient_points": pi.cod().n(),
                            "image_points": phibar.cod().n(),
                        }));
                    }
                    report.data(data);
                }
                Err(Error::NotAMorphism { pair_a, pair_b }) => {
                    report.check(
                        "morphism",
                        false,
                        Some(format!("pairs {pair_a:?} and {pair_b:?} share a relation but their images do not")),
                    );
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Factorize { dom, cod, mor } => {
            report = RunReport::new("factorize");
            let (sd, sc, map) = read_morphism_files(dom, cod, mor, &mut report)?;
            let phi = Morphism::from_point_map(&sd, &sc, map)?;
            match phi.admissibility_witness() {
                Some(w) => report.check("admissible", false, Some(format!("witness {w:?}"))),
                None => {
                    report.check("admissible", true, None);
                    let (pi, phibar, iota) = phi.factorize()?;
                    report.check("factorization-recomposes", true, None);
                    report.check("induced-map-is-isomorphism", phibar.is_bijective(), None);
                    report.data(json!({
                        "kernel": phi.kernel().indices(),
                        "projection": pi.point_map(),
                        "isomorphism": phibar.point_map(),
                        "inclusion": iota.point_map(),
                        "quotient_asc": formats::emit_scheme(pi.cod()),
                        "image_asc": formats::emit_scheme(phibar.cod()),
                    }));
                }
            }
        }
        Command::EnumerateMorphisms { dom, cod, admissible } => {
            report = RunReport::new("enumerate-morphisms");
            let sd = read_scheme(dom, &mut report)?;
            let sc = read_scheme(cod, &mut report)?;
            let ms = morphism::enumerate_morphisms_with_budget(&sd, &sc, *admissible, budget()?)
                .map_err(|e| match e {
                    Error::BudgetExceeded { candidates, budget } => CliError::Usage(format!(
                        "enumeration needs {candidates} candidates, budget is {budget}"
                    )),
                    other => CliError::Core(other),
                })?;
            report.check("enumeration-complete", true, None);
            let classes = morphism::alg_equivalence_classes(&ms)?;
            report.data(json!({
                "count": ms.len(),
                "admissible_only": admissible,
                "point_maps": ms.iter().map(|m| m.point_map().to_vec()).collect::<Vec<_>>(),
                "equivalence_classes": classes,
            }));
        }
        Command::RadGroup { file } => {
            report = RunReport::new("rad-group");
            let s = read_scheme(file, &mut report)?;
            let rad = bridge::rad_group(&s);
            report.check("thin-relations-form-a-group", true, None);
            report.data(json!({
                "order": rad.group.order(),
                "relation_of_element": rad.label,
                "table": rad.group.table_rows(),
            }));
        }
        Command::QuoGroup { file } => {
            report = RunReport::new("quo-group");
            let s = read_scheme(file, &mut report)?;
            let quo = bridge::quo_group(&s)?;
            report.check("quotient-by-residue-is-thin", true, None);
            report.data(json!({
                "order": quo.group.order(),
                "residue": quo.residue.indices(),
                "table": quo.group.table_rows(),
                "projection": quo.projection.point_map(),
                "quotient_asc": formats::emit_scheme(&quo.quotient),
            }));
        }
        Command::AdjunctionCheck { rad, quo, group, scheme } => {
            report = RunReport::new("adjunction-check");
            if *rad == *quo {
                return Err(CliError::Usage("pass exactly one of --rad or --quo".into()));
            }
            let text = read(group, &mut report)?;
            let g = formats::parse_group(&text).map_err(|e| e.in_file(group))?;
            let t = read_scheme(scheme, &mut report)?;
            if *rad {
                let r = bridge::check_rad_adjunction(&g, &t)?;
                report.check("hom-sets-in-bijection", r.bijection, None);
                report.check("naturality", r.naturality, None);
                report.check("unit-is-group-isomorphism", r.unit_is_group_isomorphism, None);
                report.check("counit-class-found", r.counit_class_found, None);
                if let Some(iso) = r.counit_representatives_are_isomorphisms {
                    report.check("counit-representatives-are-isomorphisms", iso, None);
                }
                report.data(json!({
                    "group_hom_count": r.group_hom_count,
                    "admissible_class_count": r.admissible_class_count,
                }));
            } else {
                let r = bridge::check_quo_adjunction(&t, &g)?;
                report.check("hom-sets-in-bijection", r.bijection, None);
                report.check("naturality", r.naturality, None);
                report.check("counit-is-group-isomorphism", r.counit_is_group_isomorphism, None);
                report.check("unit-kernel-is-thin-residue", r.unit_kernel_is_thin_residue, None);
                if let Some(iso) = r.unit_representatives_are_isomorphisms {
                    report.check("unit-representatives-are-isomorphisms", iso, None);
                }
                report.data(json!({
                    "group_hom_count": r.group_hom_count,
                    "admissible_class_count": r.admissible_class_count,
                }));
            }
        }
        Command::AlgebraCheck { dom, cod, mor } => {
            report = RunReport::new("algebra-check");
            let (sd, sc, map) = read_morphism_files(dom, cod, mor, &mut report)?;
            let phi = Morphism::from_point_map(&sd, &sc, map)?;
            match phi.admissibility_witness() {
                Some(w) => report.check("admissible", false, Some(format!("witness {w:?}"))),
                None => {
                    report.check("admissible", true, None);
                    match algebra::check_pushforward_identity(&phi)? {
                        None => report.check("pushforward-identity", true, None),
                        Some(w) => report.check(
                            "pushforward-identity",
                            false,
                            Some(format!("fails at (p, q, t) = {w:?}")),
                        ),
                    }
                    let a = alg_hom(&phi)?;
                    report.check("pushforward-multiplicative", a.is_multiplicative(), None);
                    let (pi, phibar, iota) = phi.factorize()?;
                    let chained =
                        alg_hom(&iota)?.compose(&alg_hom(&phibar)?)?.compose(&alg_hom(&pi)?)?;
                    report.check("functoriality-via-factorization", a == chained, None);
                    let relvals: Vec<String> = (0..sd.rank())
                        .map(|s| Ok(phi.relative_valency(s)?.to_string()))
                        .collect::<std::result::Result<_, Error>>()?;
                    report.data(json!({
                        "relative_valencies": relvals,
                        "pushforward_matrix": matrix_json(&a),
                    }));
                }
            }
        }
        Command::HopfCheck { file } => {
            report = RunReport::new("hopf-check");
            let s = read_scheme(file, &mut report)?;
            if !s.is_thin() {
                let witness = (0..s.rank()).find(|&r| s.valency(r) != 1);
                report.check(
                    "scheme-is-thin",
                    false,
                    witness.map(|r| format!("relation {r} has valency {}", s.valency(r))),
                );
            } else {
                report.check("scheme-is-thin", true, None);
                let h = hopf::hopf_structure(&s)?;
                report.check("coassociative", h.checks.coassociative, None);
                report.check("counit-left", h.checks.counit_left, None);
                report.check("counit-right", h.checks.counit_right, None);
                report.check("antipode-left", h.checks.antipode_left, None);
                report.check("antipode-right", h.checks.antipode_right, None);
                report.check("cocommutative", h.checks.cocommutative, None);
                report.check(
                    "comultiplication-is-algebra-map",
                    h.checks.comultiplication_is_algebra_map,
                    None,
                );
                report.check("counit-is-algebra-map", h.checks.counit_is_algebra_map, None);
                report.check("group-algebra-isomorphism", h.checks.group_algebra_isomorphism, None);
                report.data(json!({
                    "antipode_permutation": (0..s.rank()).map(|r| s.star(r)).collect::<Vec<_>>(),
                }));
            }
        }
        Command::ComoduleCheck { scheme, cod, mor } => {
            report = RunReport::new("comodule-check");
            let s = read_scheme(scheme, &mut report)?;
            let coaction = match (cod, mor) {
                (Some(cod), Some(mor)) => {
                    let t = read_scheme(cod, &mut report)?;
                    let text = read(mor, &mut report)?;
                    let (nd, nc, map) =
                        formats::parse_point_map(&text).map_err(|e| e.in_file(mor))?;
                    if nd != s.n() || nc != t.n() {
                        return Err(CliError::Usage(format!(
                            "morphism header {nd} {nc} does not match schemes with {} and {} points",
                            s.n(),
                            t.n()
                        )));
                    }
                    let phi = Morphism::from_point_map(&s, &t, map)?;
                    match hopf::comodule_coaction(&phi) {
                        Ok(c) => c,
                        Err(Error::CodomainNotThin) => {
                            report.check("codomain-is-thin", false, None);
                            report.finish();
                            return Ok(report);
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
                (None, None) => hopf::canonical_coaction(&s)?,
                _ => {
                    return Err(CliError::Usage(
                        "pass either no extra arguments (canonical coaction) or both a codomain scheme and a morphism file".into(),
                    ))
                }
            };
            report.check("codomain-is-thin", true, None);
            report.check("coassociative", coaction.checks.coassociative, None);
            report.check("counital", coaction.checks.counital, None);
            report.check("coaction-is-algebra-map", coaction.checks.multiplicative, None);
            report.check("coaction-preserves-unit", coaction.checks.unital, None);
            report.check(
                "counit-map-is-pushforward",
                coaction.checks.counit_map_is_pushforward,
                None,
            );
            report.check(
                "factors-through-product-algebra",
                coaction.checks.factors_through_product,
                None,
            );
            report.data(json!({
                "codomain_rank": coaction.morphism.cod().rank(),
                "rel_map": coaction.morphism.rel_map(),
                "counit_valencies": (0..s.rank())
                    .map(|p| rational_string(coaction.counit_map.entry(coaction.morphism.apply_rel(p), p)))
                    .collect::<Vec<_>>(),
            }));
        }
        Command::Selftest => {
            report = RunReport::new("selftest");
            for c in acceptance::run_acceptance() {
                report.check(c.name, c.pass, Some(c.detail));
            }
        }
    }
    report.finish();
    Ok(report)
}

fn read(path: &str, report: &mut RunReport) -> Result<String> {
    let text = fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.into(), source })?;
    report.input(path, text.as_bytes());
    Ok(text)
}

fn read_scheme(path: &str, report: &mut RunReport) -> Result<Scheme> {
    let text = read(path, report)?;
    formats::parse_scheme(&text).map_err(|e| e.in_file(path))
}

fn read_morphism_files(
    dom: &str,
    cod: &str,
    mor: &str,
    report: &mut RunReport,
) -> Result<(Scheme, Scheme, Vec<usize>)> {
    let sd = read_scheme(dom, report)?;
    let sc = read_scheme(cod, report)?;
    let text = read(mor, report)?;
    let (nd, nc, map) = formats::parse_point_map(&text).map_err(|e| e.in_file(mor))?;
    if nd != sd.n() || nc != sc.n() {
        return Err(CliError::Usage(format!(
            "morphism header {nd} {nc} does not match schemes with {} and {} points",
            sd.n(),
            sc.n()
        )));
    }
    Ok((sd, sc, map))
}

/// Parses `--closed` indices, closes them, and reports whether the input
/// was already closed.
fn closed_from_arg(s: &Scheme, arg: &str) -> Result<(ClosedSubset, bool)> {
    let mut set = RelSet::empty(s.rank());
    for token in arg.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let idx: usize = token
            .parse()
            .map_err(|_| CliError::Usage(format!("bad relation index {token:?} in --closed")))?;
        if idx >= s.rank() {
            return Err(CliError::Usage(format!(
                "relation index {idx} out of range [0, {})",
                s.rank()
            )));
        }
        set.insert(idx);
    }
    let was_closed = !set.is_empty() && closed::is_closed(s, &set);
    Ok((closed::closure(s, &set), was_closed))
}

/// Enumeration budget, optionally capped by `ASCHEME_BUDGET`.
fn budget() -> Result<u128> {
    match std::env::var("ASCHEME_BUDGET") {
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::Usage(format!("ASCHEME_BUDGET must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ENUMERATION_BUDGET),
    }
}

fn scheme_summary(s: &Scheme) -> serde_json::Value {
    json!({
        "n": s.n(),
        "rank": s.rank(),
        "valencies": s.valencies(),
        "thin": s.is_thin(),
    })
}
