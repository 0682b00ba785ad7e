//! Dispatch from a validated problem to the library and assembly of the
//! report body.

use rescale_core::algebra::{holonomy_lie, koszul_series_test, rescale_algebra, AlgebraPresentation, Verdict};
use rescale_core::exact::PowerSeries;
use rescale_core::geometry::{arrangement_series, link_report};
use rescale_core::lcs::{extract_ranks, homotopy_product, homotopy_ranks, loop_poincare, rebracket_dims};
use rescale_core::malcev::{bch, ch_invariant_raw, ch_representation, linking_from_exponents, GroupWord};
use rescale_core::quillen::{
    build_quillen_model, koszul_ce_test, koszul_quillen_test, quillen_homology_dims,
};
use rescale_core::tensor::word::MAX_LEN as MAX_WORD_LEN;
use rescale_core::tensor::{rescale_lie_dims, GradedLieDims};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::json as enc;
use crate::schema::{self, ProblemSpec};

pub const COMMANDS: &[&str] = &[
    "hilbert",
    "rescale",
    "holonomy",
    "lcs-ranks",
    "homotopy-ranks",
    "loop-poincare",
    "koszul-test",
    "quillen-homology",
    "bch",
    "ch-represent",
    "link-derivation",
    "link-report",
    "arrangement-report",
    "rebracket",
];

/// Settings shared by every command after flags and the problem file are
/// merged.
#[derive(Clone, Debug)]
pub struct Settings {
    pub truncate: usize,
    pub k: usize,
    pub mode: String,
    pub p_max: usize,
    pub weight_max: usize,
    pub order: usize,
}

type Out = Result<(Value, Vec<&'static str>), CliError>;

fn algebra(p: &ProblemSpec) -> Result<AlgebraPresentation, CliError> {
    p.algebra.as_ref().ok_or_else(|| CliError::schema("missing field `algebra`"))?.build()
}

/// The input series, or the Hilbert series of the input algebra.
fn poincare(p: &ProblemSpec, order: usize) -> Result<PowerSeries, CliError> {
    match (&p.series, &p.algebra) {
        (Some(s), _) => schema::series(s, order),
        (None, Some(_)) => Ok(algebra(p)?.hilbert(order)),
        (None, None) => Err(CliError::schema("need `series` or `algebra`")),
    }
}

fn need_k(s: &Settings) -> Result<usize, CliError> {
    if s.k == 0 {
        return Err(CliError::schema("k must be at least 1"));
    }
    Ok(s.k)
}

fn need_order(s: &Settings) -> Result<usize, CliError> {
    if s.order == 0 || s.order > MAX_WORD_LEN {
        return Err(CliError::schema(format!("order must lie in 1..={}", MAX_WORD_LEN)));
    }
    Ok(s.order)
}

pub fn dispatch(command: &str, p: &ProblemSpec, s: &Settings) -> Out {
    let n = s.truncate;
    match command {
        "hilbert" => {
            let a = algebra(p)?;
            Ok((json!({ "generators": a.n(), "hilbert": enc::series(&a.hilbert(n)) }), vec![]))
        }
        "rescale" => {
            let k = need_k(s)?;
            let a = algebra(p)?;
            let body = json!({
                "base": enc::series(&a.hilbert(n)),
                "rescaled": enc::series(&rescale_algebra(&a, k).hilbert(n)),
            });
            Ok((body, vec!["rescaled algebra puts degree q in degree q(2k+1)"]))
        }
        "holonomy" => {
            let a = algebra(p)?;
            let h = holonomy_lie(&a, n)?;
            let mut body = json!({
                "dims": enc::dims(h.dims()),
                "relations": h.relations().iter().map(|r| json!(r.to_string())).collect::<Vec<_>>(),
            });
            if s.k >= 1 {
                body["rescaled_dims"] = enc::dims(&rescale_lie_dims(h.dims(), s.k));
            }
            Ok((body, vec!["holonomy relations are the annihilator of the cup-product kernel"]))
        }
        "lcs-ranks" => {
            let ranks = extract_ranks(&poincare(p, n)?, n)?;
            Ok((json!({ "ranks": enc::rank_table(&ranks) }), vec!["prod_n (1 - t^n)^phi_n = P(-t)"]))
        }
        "homotopy-ranks" => {
            let k = need_k(s)?;
            let px = poincare(p, n)?;
            let ranks = homotopy_ranks(&px, k, n)?;
            let body = json!({
                "ranks": enc::rank_table(&ranks),
                "product": enc::series(&homotopy_product(&ranks, k, n)),
                "rescaled_at_minus_t": enc::series(&px.substitute(-1, 2 * k + 1)),
            });
            Ok((body, vec!["prod_r (1 - t^((2k+1)r))^Phi_(2kr) = P_X(-t^(2k+1))"]))
        }
        "loop-poincare" => {
            let k = need_k(s)?;
            let lp = loop_poincare(&poincare(p, n)?, k, n)?;
            Ok((json!({ "loop_series": enc::series(&lp) }), vec!["P_loop(t) = 1 / P_X(-t^(2k))"]))
        }
        "koszul-test" => koszul(p, s),
        "quillen-homology" => {
            let k = need_k(s)?;
            let a = algebra(p)?;
            let model = build_quillen_model(&rescale_algebra(&a, k), n + 1)?;
            let h = quillen_homology_dims(&model, n)?;
            let body = json!({
                "generators": model.gens().len(),
                "homology": enc::dims(&h.dims),
                "bigraded": enc::bigraded(&h.bigraded),
            });
            Ok((body, vec!["bigraded entries are [degree, bracket length, dimension]"]))
        }
        "bch" => {
            let r = need_order(s)?;
            let gens = p.generators.unwrap_or(2);
            let x = match &p.x {
                Some(t) => schema::malcev_element(t, gens, r)?,
                None => schema::malcev_element(&default_term(1), gens, r)?,
            };
            let y = match &p.y {
                Some(t) => schema::malcev_element(t, gens, r)?,
                None => schema::malcev_element(&default_term(2.min(gens)), gens, r)?,
            };
            let z = bch(&x, &y, r)?;
            let body = json!({ "x": enc::malcev(&x), "y": enc::malcev(&y), "product": enc::malcev(&z) });
            Ok((body, vec!["x * y = log(exp x exp y) in the truncated tensor algebra"]))
        }
        "ch-represent" => {
            let r = need_order(s)?;
            let text = p.word.as_ref().ok_or_else(|| CliError::schema("missing field `word`"))?;
            let gens = p.generators.unwrap_or_else(|| max_letter(text));
            let w = GroupWord::parse(text, gens)?;
            let rho = ch_representation(&w, r)?;
            Ok((json!({ "word": w.to_string(), "image": enc::malcev(&rho) }), vec!["rho(w) = log(prod exp(+-x_i))"]))
        }
        "link-derivation" => {
            let r = need_order(s)?;
            let ls = schema::words(p.longitudes.as_ref().ok_or_else(|| CliError::schema("missing field `longitudes`"))?)?;
            let inv = ch_invariant_raw(&ls, r)?;
            let d = &inv.derivation;
            let body = json!({
                "order": d.order(),
                "images": d.images().iter().map(enc::malcev).collect::<Vec<_>>(),
                "linking": d.linking(),
                "linking_from_exponents": linking_from_exponents(&ls),
                "orbit_comparison": inv.orbit_comparison,
            });
            Ok((body, vec!["d(v_i) = [x_i, rho(l_i)]; lowest part is the linking matrix"]))
        }
        "link-report" => {
            let k = need_k(s)?;
            let g = p.link.as_ref().ok_or_else(|| CliError::schema("missing field `link`"))?.build()?;
            let r = link_report(&g, k, n)?;
            let body = json!({
                "components": r.n,
                "connected": r.connected,
                "verdict": enc::verdict(&r.verdict),
                "cohomology": enc::series(&r.cohomology),
                "holonomy": enc::dims(&r.holonomy),
                "homotopy_ranks": enc::rank_table(&r.homotopy_ranks),
                "homotopy_product": enc::series(&r.homotopy_product),
                "loop_series": enc::series(&r.loop_series),
                "rescaling_formula_holds": r.rescaling_formula_holds,
                "closed_forms_agree": r.closed_forms_agree,
            });
            Ok((body, vec![
                "connected linking graph iff Koszul cohomology",
                "complete graph: product (1 - t^(2k+1))(1 - (n-1)t^(2k+1))",
                "complete graph: loop series 1/((1 - t^(2k))(1 - (n-1)t^(2k)))",
            ]))
        }
        "arrangement-report" => {
            let k = need_k(s)?;
            let spec = p.arrangement.as_ref().ok_or_else(|| CliError::schema("missing field `arrangement`"))?.build()?;
            let r = arrangement_series(&spec, k, n)?;
            let ranks = match &r.homotopy_ranks {
                Ok(t) => json!({ "table": enc::rank_table(t) }),
                Err(e) => json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
            };
            let candidates = r.candidates.as_ref().map(|c| {
                json!({
                    "actual": enc::series(&c.actual),
                    "lcs_predicted": enc::series(&c.lcs_predicted),
                    "first_difference": c.first_difference,
                })
            });
            let body = json!({
                "poincare": enc::series(&r.poincare),
                "verdict": enc::verdict(&r.verdict),
                "homotopy_ranks": ranks,
                "homotopy_product": r.homotopy_product.as_ref().map(enc::series),
                "loop_series": r.loop_series.as_ref().map(enc::series),
                "loop_candidates": candidates,
                "closed_forms_agree": r.closed_forms_agree,
            });
            Ok((body, vec![
                "factored P_X = prod (1 + d_i t): product prod (1 - d_i t^(2k+1)), loop series prod (1 - d_i t^(2k))^-1",
                "generic with l = n - 1: loop series 1/((1 - t^(2k))^n - t^((2k+1)n - 2))",
            ]))
        }
        "rebracket" => {
            let m = p.m.ok_or_else(|| CliError::schema("missing field `m`"))?;
            if m < 2 {
                return Err(CliError::schema("m must be at least 2"));
            }
            let d = p.dims.as_ref().ok_or_else(|| CliError::schema("missing field `dims`"))?;
            let rb = rebracket_dims(&GradedLieDims::from_slice(d), m);
            Ok((json!({ "dims": enc::dims(&rb.dims), "dropped": rb.dropped }), vec!["E{m}_r = E_(r(m-1))"]))
        }
        other => Err(CliError::schema(format!("unknown command {other:?}"))),
    }
}

fn default_term(i: usize) -> Vec<schema::BracketTerm> {
    vec![schema::BracketTerm { bracket: vec![i], coefficient: None }]
}

fn max_letter(word: &str) -> usize {
    word.split_whitespace()
        .filter_map(|t| t.strip_prefix('x'))
        .filter_map(|t| t.split('^').next()?.parse::<usize>().ok())
        .max()
        .unwrap_or(1)
}

fn koszul(p: &ProblemSpec, s: &Settings) -> Out {
    let a = algebra(p)?;
    let n = s.truncate;
    let modes: &[&str] = match s.mode.as_str() {
        "all" => &["series", "quillen", "ce"],
        "series" => &["series"],
        "quillen" => &["quillen"],
        "ce" => &["ce"],
        other => return Err(CliError::schema(format!("unknown mode {other:?}"))),
    };
    let mut body = json!({});
    let mut statuses = Vec::new();
    for &mode in modes {
        let v = match mode {
            "series" => {
                // A non-quadratic algebra is never Koszul; report it as a failure.
                let v = match a.first_non_quadratic_degree() {
                    Some(d) => Verdict::Fail {
                        degree: Some(d),
                        detail: format!("not quadratic: the ideal needs a generator in degree {d}"),
                    },
                    None => koszul_series_test(&a, n)?,
                };
                statuses.push(v.passed());
                json!({ "verdict": enc::verdict(&v) })
            }
            "quillen" => {
                let k = need_k(s)?;
                let t = koszul_quillen_test(&a, k, n)?;
                statuses.push(t.verdict.passed());
                json!({
                    "verdict": enc::verdict(&t.verdict),
                    "homology": enc::dims(&t.homology.dims),
                    "bigraded": enc::bigraded(&t.homology.bigraded),
                    "rescaled_holonomy": enc::dims(&t.rescaled_holonomy),
                })
            }
            _ => {
                let t = koszul_ce_test(&a, s.p_max, s.weight_max)?;
                statuses.push(t.verdict.passed());
                json!({ "verdict": enc::verdict(&t.verdict), "cohomology": enc::bigraded(&t.cohomology) })
            }
        };
        body[mode] = v;
    }
    body["agree"] = json!(statuses.windows(2).all(|w| w[0] == w[1]));
    Ok((body, vec![
        "series: H_A(t) H_A!(-t) = 1",
        "quillen: homology of the rescaled model equals the rescaled holonomy algebra",
        "ce: Lie algebra cohomology of the holonomy algebra is diagonal and equals A",
    ]))
}
