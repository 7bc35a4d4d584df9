use crate::inputs;
use crate::reports::entries;
use crate::{CliError, CliResult, Job, Outcome};
use arrtwist_core::algebra::{Laurent, Rational, Ring};
use arrtwist_core::arrangement::{
    betti_data, find_nonresonant_character, generic_position_profile, is_nonresonant, Arrangement, Character, Girth,
};
use arrtwist_core::chain::{decide_isomorphic, homology, FreeChainComplex};
use arrtwist_core::formats::HomologyEntry;
use arrtwist_core::fox::{alexander_complex, GroupPresentation, Specialization};
use arrtwist_core::koszul::{
    build_koszul, complete_homology_generic_position, generic_range_homology, pi_p_presentation_boolean, UnitAssignment,
};
use arrtwist_core::linalg::{rank, Matrix};
use arrtwist_core::milnor::{obstruction_report, spectrum_from_presentation};
use arrtwist_core::tower::{
    build_tower_complex, poincare_coefficients, rank_formula_general, rank_formula_nonresonant, tor_groups,
    TowerCharacter, TowerSpec,
};
use arrtwist_core::Error;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

type LQ = Laurent<Rational>;

#[derive(Clone, Debug, Serialize)]
struct PathValue {
    path: String,
    value: Value,
}

#[derive(Clone, Debug, Serialize)]
struct Check {
    name: String,
    agree: bool,
    paths: Vec<PathValue>,
}

impl Check {
    fn new(name: impl Into<String>, paths: Vec<(&str, Value)>) -> Self {
        let agree = paths.windows(2).all(|w| w[0].1 == w[1].1);
        let paths = paths.into_iter().map(|(p, value)| PathValue { path: p.to_string(), value }).collect();
        Check { name: name.into(), agree, paths }
    }

    fn failed(name: impl Into<String>, message: String) -> Self {
        Check {
            name: name.into(),
            agree: false,
            paths: vec![PathValue { path: "error".into(), value: json!(message) }],
        }
    }
}

fn value<T: Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

/// Runs every computation path that applies to the input and compares.
pub fn crosscheck(job: &Job) -> CliResult<Outcome> {
    let Job::Crosscheck { arrangement, presentation, tower, weights, samples, seed } = job else {
        return Err(CliError::Usage("crosscheck needs a crosscheck job".into()));
    };
    let mut rng = ChaCha8Rng::seed_from_u64(*seed);
    let checks = match (arrangement, presentation, tower) {
        (Some(path), None, None) => {
            arrangement_checks(&inputs::arrangement(path)?, weights.as_deref(), *samples, &mut rng)?
        }
        (None, Some(path), None) => {
            presentation_checks(&inputs::presentation(path)?, weights.as_deref(), *samples, &mut rng)?
        }
        (None, None, Some(path)) => {
            let input = inputs::tower(path, weights.as_deref())?;
            tower_checks(&input.tower, &input.character, *samples, &mut rng)?
        }
        _ => return Err(CliError::Usage("give exactly one of --arrangement, --presentation and --tower".into())),
    };
    if checks.is_empty() {
        return Err(CliError::Usage("no two computation paths apply to this input".into()));
    }
    let agree = checks.iter().all(|c| c.agree);
    let mut report = json!({ "command": "crosscheck", "agree": agree, "checks": checks });
    if agree {
        return Ok(Outcome { report, exit_code: 0 });
    }
    let failing: Vec<&str> = checks.iter().filter(|c| !c.agree).map(|c| c.name.as_str()).collect();
    let error = CliError::Core(Error::Disagreement(failing.join(", ")));
    report["error"] = json!(error.kind());
    report["message"] = json!(error.to_string());
    report["exit_code"] = json!(error.exit_code());
    Ok(Outcome { report, exit_code: error.exit_code() })
}

fn random_weights(rng: &mut ChaCha8Rng, count: usize) -> Vec<i64> {
    (0..count).map(|_| rng.gen_range(-3..=3)).collect()
}

fn monomials(weights: &[i64], sign: i64) -> Vec<LQ> {
    weights.iter().map(|&w| Laurent::t_power(&(), sign * w)).collect()
}

/// `H_q`, `q < degrees`, of the Alexander complex at `x_i ↦ t^{-γ_i}`.
fn presentation_homology(p: &GroupPresentation, weights: &[i64], degrees: usize) -> CliResult<Vec<HomologyEntry>> {
    let phi = Specialization::new((), monomials(weights, -1))?;
    let c = alexander_complex::<LQ>(p, &phi)?;
    Ok((0..degrees).map(|q| homology(&c, q).map(|h| HomologyEntry::from(&h))).collect::<Result<_, _>>()?)
}

fn koszul_low_degrees(n: usize, weights: &[i64], degrees: usize) -> CliResult<Vec<HomologyEntry>> {
    let u = UnitAssignment::<LQ>::laurent_character((), weights);
    let kc = build_koszul(&u, degrees.min(n))?;
    Ok((0..degrees).map(|q| homology(&kc.complex, q).map(|h| HomologyEntry::from(&h))).collect::<Result<_, _>>()?)
}

fn arrangement_checks(
    a: &Arrangement,
    weights: Option<&str>,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> CliResult<Vec<Check>> {
    let profile = generic_position_profile(a)?;
    let n = a.n();
    let r = a.ambient();
    let betti = betti_data(a)?;
    let mut checks = Vec::new();

    let trivial = generic_range_homology(a, &UnitAssignment::<Rational>::trivial((), n))?;
    let koszul: Vec<u64> = trivial.groups.iter().map(|g| g.free_rank as u64).collect();
    checks.push(Check::new(
        "trivial-coefficients",
        vec![("koszul", value(&koszul)), ("betti", value(&betti.betti[..koszul.len()]))],
    ));

    let ch = match weights {
        Some(text) => inputs::character(a, text)?,
        None => find_nonresonant_character(a, 3).unwrap_or_else(|| Character::from_meridian_weights(&vec![0; n])),
    };
    let low = match profile.girth {
        Girth::Finite(c) => (c - 2).min(2),
        Girth::Infinite => 2,
    }
    .min(n + 1);
    let commutators = GroupPresentation::free_abelian(n);
    let mut characters = vec![ch.meridian_weights().to_vec()];
    characters.extend((0..samples).map(|_| random_weights(rng, n)));
    for w in &characters {
        checks.push(Check::new(
            format!("presentation-low-degrees {w:?}"),
            vec![
                ("koszul", value(koszul_low_degrees(n, w, low)?)),
                ("commutator-presentation", value(presentation_homology(&commutators, w, low)?)),
            ],
        ));
    }

    if profile.generic_position {
        let u = UnitAssignment::<LQ>::laurent_character((), ch.meridian_weights());
        match complete_homology_generic_position(a, &u) {
            Ok(h) => checks.push(Check::new(
                "top-homology",
                vec![("kernel", value(h.kernel_rank as i64)), ("euler-formula", value(h.formula_rank))],
            )),
            Err(Error::Disagreement(message)) => checks.push(Check::failed("top-homology", message)),
            Err(e) => return Err(e.into()),
        }
        if r >= 3 {
            let pres = pi_p_presentation_boolean::<Rational>(a, &ch, ())?;
            let kc = build_koszul(&u, n)?;
            let tor: Vec<usize> =
                (0..=r).map(|q| homology(&kc.complex, q).map(|h| h.free_rank)).collect::<Result<_, _>>()?;
            let mut paths = vec![
                ("cokernel", value(pres.cokernel.free_rank as i64)),
                ("general-formula", value(rank_formula_general(betti.euler, r, &tor)?)),
            ];
            if is_nonresonant(a, &ch)?.nonresonant {
                if let Ok(rank) = rank_formula_nonresonant(betti.euler, r, n + 1, None, None) {
                    paths.push(("nonresonant-formula", value(rank.value)));
                }
            }
            checks.push(Check::new("homotopy-rank", paths));
        }
    }
    Ok(checks)
}

fn presentation_checks(
    p: &GroupPresentation,
    weights: Option<&str>,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> CliResult<Vec<Check>> {
    let n = p.generators();
    let mut checks = Vec::new();

    let exponent_sums: Vec<Vec<i64>> = p.relators().iter().map(|r| r.abelianization(n)).collect();
    let data = exponent_sums.iter().flatten().map(|&v| Rational::from_i64(&(), v)).collect();
    let relation_rank = rank(&Matrix::new((), exponent_sums.len(), n, data)?);
    let trivial = Specialization::new((), vec![Rational::one(&()); n])?;
    let c = alexander_complex::<Rational>(p, &trivial)?;
    checks.push(Check::new(
        "abelianization",
        vec![("fox", value(homology(&c, 1)?.free_rank)), ("exponent-sums", value(n - relation_rank))],
    ));

    let kills = |w: &[i64]| exponent_sums.iter().all(|s| s.iter().zip(w).map(|(a, b)| a * b).sum::<i64>() == 0);
    let w = match weights {
        Some(text) => inputs::int_list(text, "weight")?,
        None if kills(&vec![1; n]) => vec![1; n],
        None => vec![0; n],
    };
    if w.len() != n {
        return Err(CliError::Usage(format!("{} weights for {n} generators", w.len())));
    }
    let h0 = presentation_homology(p, &w, 1)?.remove(0);
    let g = w.iter().fold(0i64, |acc, x| acc.gcd(x));
    let expected = if g == 0 {
        HomologyEntry { degree: 0, free_rank: 1, torsion: Vec::new() }
    } else {
        let divisor = Laurent::<Rational>::t_power(&(), g).sub(&LQ::one(&()));
        HomologyEntry { degree: 0, free_rank: 0, torsion: vec![divisor.to_string()] }
    };
    checks
        .push(Check::new(format!("augmentation {w:?}"), vec![("fox", value(h0)), ("gcd-of-weights", value(expected))]));

    let mut commutators: Vec<_> = GroupPresentation::free_abelian(n).relators().to_vec();
    let mut relators: Vec<_> = p.relators().to_vec();
    commutators.sort();
    relators.sort();
    if commutators == relators {
        let low = 2.min(n + 1);
        let mut characters = vec![w.clone()];
        characters.extend((0..samples).map(|_| random_weights(rng, n)));
        for w in &characters {
            checks.push(Check::new(
                format!("koszul-low-degrees {w:?}"),
                vec![
                    ("koszul", value(koszul_low_degrees(n, w, low)?)),
                    ("fox", value(presentation_homology(p, w, low)?)),
                ],
            ));
        }
    }

    if p.meridians() {
        let s = spectrum_from_presentation(p)?;
        let report = obstruction_report(&s);
        checks.push(Check::new(
            "milnor-untwisted",
            vec![("spectrum", value(s.values()[0])), ("generators", value(n as u64))],
        ));
        if report.constant_tail {
            checks.push(Check::new(
                "milnor-divisibility",
                vec![("constant-tail", value(true)), ("divides", value(report.divides))],
            ));
        }
    }
    Ok(checks)
}

fn tower_checks(tw: &TowerSpec, ch: &TowerCharacter, samples: usize, rng: &mut ChaCha8Rng) -> CliResult<Vec<Check>> {
    let mut checks = Vec::new();
    let count = tw.generator_count();
    let standard = tw.standard_presentation();
    let mut characters = vec![ch.clone()];
    for _ in 0..samples {
        characters.push(TowerCharacter::new(tw, random_weights(rng, count))?);
    }
    for c in &characters {
        let tower: Vec<HomologyEntry> = entries(&tor_groups::<Rational>(tw, c, 1, ())?);
        checks.push(Check::new(
            format!("presentation-low-degrees {:?}", c.weights()),
            vec![("tower", value(tower)), ("presentation", value(presentation_homology(&standard, c.weights(), 2)?))],
        ));
    }

    let trivial = TowerCharacter::trivial(tw);
    let ranks: Vec<u64> =
        tor_groups::<Rational>(tw, &trivial, tw.level_count(), ())?.iter().map(|h| h.free_rank as u64).collect();
    checks.push(Check::new(
        "trivial-coefficients",
        vec![("tower", value(ranks)), ("poincare", value(poincare_coefficients(&tw.exponents())))],
    ));

    let abelian = (0..tw.level_count())
        .all(|level| tw.rank(level) == 1 && (0..tw.offset(level)).all(|g| tw.monodromy(level, g).is_identity()));
    if abelian {
        let c: FreeChainComplex<LQ> = build_tower_complex::<Rational>(tw, ch, ())?;
        let kc = build_koszul(&UnitAssignment::<LQ>::laurent_character((), ch.weights()), count)?;
        let report = decide_isomorphic(&c, &kc.complex)?;
        checks.push(Check::new(
            "koszul",
            vec![("tower-isomorphic-to-koszul", value(report.isomorphic)), ("expected", value(true))],
        ));
    }
    Ok(checks)
}
