use crate::inputs::{self, laurent_q};
use crate::{CliError, CliResult, Job};
use arrtwist_core::algebra::{Ring, Scalar};
use arrtwist_core::arrangement::{
    betti_data, dense_edges, find_nonresonant_character, girth, intersection_lattice, is_nonresonant, Arrangement,
    Flat, Girth,
};
use arrtwist_core::chain::{decide_isomorphic, homology_all, HomologyGroup};
use arrtwist_core::formats::HomologyEntry;
use arrtwist_core::fox::{alexander_complex, Specialization};
use arrtwist_core::koszul::{complete_homology_generic_position, generic_range_homology, UnitAssignment};
use arrtwist_core::milnor::{
    obstruction_report, spectrum_from_presentation, spectrum_generic_position, MilnorSpectrum,
};
use arrtwist_core::tower::{pi_p_presentation_fibertype, poincare_coefficients, tor_groups};
use serde_json::{json, Value};

/// Runs `$body` with `$k` bound to the field under a Laurent ring and
/// `$ctx` to its context.
macro_rules! over_laurent {
    ($ring:expr, $op:literal, |$k:ident, $ctx:ident| $body:expr) => {{
        let ring: &arrtwist_core::algebra::RingDescriptor = $ring;
        match ring {
            arrtwist_core::algebra::RingDescriptor::Laurent(base) => match base.as_ref() {
                arrtwist_core::algebra::RingDescriptor::Rationals => {
                    type $k = arrtwist_core::algebra::Rational;
                    let $ctx = ();
                    $body
                }
                arrtwist_core::algebra::RingDescriptor::PrimeField(p) => {
                    type $k = arrtwist_core::algebra::PrimeField;
                    let $ctx = *p;
                    $body
                }
                arrtwist_core::algebra::RingDescriptor::Cyclotomic(d) => {
                    type $k = arrtwist_core::algebra::Cyclotomic;
                    let $ctx = arrtwist_core::algebra::CyclotomicField::new(*d);
                    $body
                }
                _ => Err(arrtwist_core::Error::UnsupportedRing { op: $op, ring: ring.to_string() }.into()),
            },
            _ => Err(arrtwist_core::Error::UnsupportedRing { op: $op, ring: ring.to_string() }.into()),
        }
    }};
}

pub fn entries<R: Ring>(groups: &[HomologyGroup<R>]) -> Vec<HomologyEntry> {
    groups.iter().map(HomologyEntry::from).collect()
}

pub fn girth_json(c: Girth) -> Value {
    match c {
        Girth::Finite(c) => json!(c),
        Girth::Infinite => json!("infinity"),
    }
}

fn flat_json(f: &Flat) -> Value {
    json!({ "codim": f.codim, "indices": f.indices })
}

fn scalars_json(values: &[Scalar]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub fn report(job: &Job) -> CliResult<Value> {
    match job {
        Job::Lattice { arrangement } => lattice(&inputs::arrangement(arrangement)?),
        Job::Girth { arrangement } => {
            let a = inputs::arrangement(arrangement)?;
            Ok(json!({ "girth": girth_json(girth(&a)), "rank": a.ambient(), "hyperplanes": a.hyperplane_count() }))
        }
        Job::Dense { arrangement } => {
            let a = inputs::arrangement(arrangement)?;
            let edges: Vec<Value> = dense_edges(&a).iter().map(flat_json).collect();
            Ok(json!({ "dense_edges": edges }))
        }
        Job::Betti { arrangement } => {
            let a = inputs::arrangement(arrangement)?;
            let b = betti_data(&a)?;
            Ok(json!({ "betti": b.betti, "euler": b.euler }))
        }
        Job::Nonres { arrangement, weights, bound } => {
            let a = inputs::arrangement(arrangement)?;
            match weights {
                Some(text) => {
                    let ch = inputs::character(&a, text)?;
                    let r = is_nonresonant(&a, &ch)?;
                    let violators: Vec<Value> = r.violators.iter().map(flat_json).collect();
                    Ok(json!({ "weights": ch.weights(), "nonresonant": r.nonresonant, "violators": violators }))
                }
                None => {
                    let found = find_nonresonant_character(&a, *bound);
                    Ok(json!({ "bound": bound, "found": found.map(|c| c.weights().to_vec()) }))
                }
            }
        }
        Job::HomologyKoszul { arrangement, weights, units, ring, full } => {
            let a = inputs::arrangement(arrangement)?;
            let meridian = match weights {
                Some(text) => Some(inputs::character(&a, text)?.meridian_weights().to_vec()),
                None => None,
            };
            let (ring, values) = inputs::units(a.n(), meridian.as_deref(), units.as_deref(), ring.as_deref())?;
            let u = UnitAssignment::scalars(ring.clone(), values.clone())?;
            let mut out = if *full {
                let h = complete_homology_generic_position(&a, &u)?;
                json!({
                    "groups": entries(&h.groups),
                    "euler": h.euler,
                    "kappa": h.kappa,
                    "kernel_rank": h.kernel_rank,
                    "formula_rank": h.formula_rank,
                })
            } else {
                let h = generic_range_homology(&a, &u)?;
                json!({ "girth": girth_json(h.girth), "groups": entries(&h.groups), "note": h.note })
            };
            out["ring"] = json!(ring.to_string());
            out["units"] = json!(scalars_json(&values));
            Ok(out)
        }
        Job::HomologyFox { presentation, weights, units, ring } => {
            let p = inputs::presentation(presentation)?;
            let weights = weights.as_deref().map(|t| inputs::int_list(t, "weight")).transpose()?;
            let (ring, values) = inputs::units(p.generators(), weights.as_deref(), units.as_deref(), ring.as_deref())?;
            let phi = Specialization::new(ring.clone(), values.clone())?;
            let c = alexander_complex(&p, &phi)?;
            Ok(json!({
                "ring": ring.to_string(),
                "units": scalars_json(&values),
                "ranks": c.ranks(),
                "groups": entries(&homology_all(&c)),
            }))
        }
        Job::HomologyTower { tower, weights, max_degree, ring } => {
            let input = inputs::tower(tower, weights.as_deref())?;
            let ring = inputs::ring(ring.as_deref(), laurent_q())?;
            let top = max_degree.unwrap_or(input.tower.level_count());
            let groups = over_laurent!(&ring, "homology tower", |K, ctx| {
                let groups = tor_groups::<K>(&input.tower, &input.character, top, ctx)?;
                Ok::<_, CliError>(entries(&groups))
            })?;
            Ok(json!({
                "ring": ring.to_string(),
                "exponents": input.tower.exponents(),
                "generators": input.tower.generator_names(),
                "weights": input.character.weights(),
                "ranks": poincare_coefficients(&input.tower.exponents()),
                "groups": groups,
            }))
        }
        Job::MilnorSpectrum { presentation, arrangement } => match (presentation, arrangement) {
            (Some(path), None) => {
                let s = spectrum_from_presentation(&inputs::presentation(path)?)?;
                Ok(
                    json!({ "n": s.n(), "spectrum": s.values(), "b1_total": s.b1_total(), "obstruction": obstruction_report(&s) }),
                )
            }
            (None, Some(path)) => {
                let g = spectrum_generic_position(&inputs::arrangement(path)?)?;
                let s = g.spectrum()?;
                Ok(json!({
                    "n": s.n(),
                    "spectrum": s.values(),
                    "b1_total": s.b1_total(),
                    "by_degree": g.by_degree,
                    "totals": g.totals,
                    "obstruction": obstruction_report(&s),
                }))
            }
            _ => Err(CliError::Usage("give exactly one of --presentation and --arrangement".into())),
        },
        Job::MilnorObstruct { n, spectrum } => {
            let values: Vec<u64> = inputs::int_list(spectrum, "spectrum")?
                .into_iter()
                .map(|v| u64::try_from(v).map_err(|_| CliError::Usage(format!("negative Betti number {v}"))))
                .collect::<CliResult<_>>()?;
            let n = match n {
                Some(n) => *n,
                None => values.len().checked_sub(1).ok_or_else(|| CliError::Usage("empty spectrum".into()))?,
            };
            let s = MilnorSpectrum::new(n, values)?;
            Ok(serde_json::to_value(obstruction_report(&s)).expect("report serializes"))
        }
        Job::PiRank { arrangement, tower, weights, p, ring } => {
            let ring = inputs::ring(ring.as_deref(), laurent_q())?;
            match (arrangement, tower) {
                (Some(path), None) => {
                    let a = inputs::arrangement(path)?;
                    let ch = match weights {
                        Some(text) => inputs::character(&a, text)?,
                        None => find_nonresonant_character(&a, 3)
                            .ok_or_else(|| CliError::Usage("no nonresonant character found; pass --weights".into()))?,
                    };
                    let nonresonant = is_nonresonant(&a, &ch)?.nonresonant;
                    let pres = over_laurent!(&ring, "pi rank", |K, ctx| {
                        let pres = arrtwist_core::koszul::pi_p_presentation_boolean::<K>(&a, &ch, ctx)?;
                        Ok::<_, CliError>(pi_json(pres.p, pres.matrix.rows(), pres.matrix.cols(), &pres.cokernel))
                    })?;
                    if let Some(p) = p.filter(|&p| p + 1 != a.ambient()) {
                        return Err(CliError::Usage(format!(
                            "an arrangement of rank {} determines p = {}, not {p}",
                            a.ambient(),
                            a.ambient().saturating_sub(1)
                        )));
                    }
                    let mut out = pres;
                    out["weights"] = json!(ch.weights());
                    out["nonresonant"] = json!(nonresonant);
                    out["ring"] = json!(ring.to_string());
                    Ok(out)
                }
                (None, Some(path)) => {
                    let input = inputs::tower(path, weights.as_deref())?;
                    let p = p.ok_or_else(|| CliError::Usage("--p is required with --tower".into()))?;
                    let mut out = over_laurent!(&ring, "pi rank", |K, ctx| {
                        let pres = pi_p_presentation_fibertype::<K>(&input.tower, p, &input.character, ctx)?;
                        Ok::<_, CliError>(pi_json(pres.p, pres.matrix.rows(), pres.matrix.cols(), &pres.cokernel))
                    })?;
                    out["weights"] = json!(input.character.weights());
                    out["ring"] = json!(ring.to_string());
                    Ok(out)
                }
                _ => Err(CliError::Usage("give exactly one of --arrangement and --tower".into())),
            }
        }
        Job::ChainIso { a, b } => {
            let ca = inputs::complex(a)?;
            let cb = inputs::complex(b)?;
            let r = decide_isomorphic(&ca, &cb)?;
            let divisors: Vec<Value> = r
                .divisors
                .iter()
                .enumerate()
                .map(|(i, (x, y))| json!({ "degree": i + 1, "a": scalars_json(x), "b": scalars_json(y) }))
                .collect();
            Ok(json!({ "isomorphic": r.isomorphic, "reason": r.reason, "divisors": divisors }))
        }
        Job::ChainHomology { complex } => {
            let c = inputs::complex(complex)?;
            Ok(json!({ "ring": c.ring().to_string(), "ranks": c.ranks(), "groups": entries(&homology_all(&c)) }))
        }
        Job::Crosscheck { .. } => unreachable!("crosscheck has its own driver"),
    }
}

fn pi_json<R: Ring>(p: usize, rows: usize, cols: usize, cokernel: &HomologyGroup<R>) -> Value {
    json!({
        "p": p,
        "presentation": { "rows": rows, "cols": cols },
        "rank": cokernel.free_rank,
        "torsion": cokernel.torsion_strings(),
    })
}

fn lattice(a: &Arrangement) -> CliResult<Value> {
    let l = intersection_lattice(a);
    let flats: Vec<Value> = l
        .flats()
        .iter()
        .zip(l.mobius())
        .map(|(f, mu)| json!({ "codim": f.codim, "indices": f.indices, "mobius": mu }))
        .collect();
    Ok(json!({
        "rank": a.ambient(),
        "hyperplanes": a.hyperplane_count(),
        "labels": a.labels(),
        "girth": girth_json(girth(a)),
        "flats": flats,
    }))
}
