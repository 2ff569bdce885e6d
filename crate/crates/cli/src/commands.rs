//! Implementations of the command-line verbs. All reports go to standard
//! output; diagnostics go to standard error via the error path in `main`.

use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};

use ordec_core::fixtures::{self, Fixture};
use ordec_core::harness::{
    check_axioms_of_relation, check_event_properties, check_p1prime, check_p1prime_on,
    check_p3_p4_u, check_representation_roundtrip, check_roundtrip_on, check_sure_thing,
    likelihood_suite, savage_suite, search_counterexample, system_p_suite, system_p_suite_on,
    AxiomFamily, CheckOutcome, CheckReport, ExplicitRelation, LiftRule, SearchBounds,
    SearchProperty,
};
use ordec_core::lifting::{
    consequence_lift_compare, consequence_preference_matrix, lift_compare,
    lift_compare_conditional, preference_matrix, surely_reached_consequences, Attitude,
    PreferenceMatrix,
};
use ordec_core::likelihood::LikelihoodRelation;
use ordec_core::nonmonotonic::nm_entails;
use ordec_core::{PossibilityProfile, UncertaintyComparator};

use crate::problem::{parse_event_literal, Problem};

/// Comparison rule selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RuleArg {
    /// Lift the necessity ordering of the pi levels
    LiftNecessity,
    /// Lift the weight-sum ordering
    LiftQualprob,
    /// Consequence-side rule, judging by the worst surely-reached outcome
    ConsequencePessimistic,
    /// Consequence-side rule, judging by the best surely-reached outcome
    ConsequenceOptimistic,
}

fn default_rule(problem: &Problem) -> RuleArg {
    if problem.pi.is_some() {
        RuleArg::LiftNecessity
    } else {
        RuleArg::LiftQualprob
    }
}

fn rule_name(rule: RuleArg) -> &'static str {
    match rule {
        RuleArg::LiftNecessity => "lift-necessity",
        RuleArg::LiftQualprob => "lift-qualprob",
        RuleArg::ConsequencePessimistic => "consequence-pessimistic",
        RuleArg::ConsequenceOptimistic => "consequence-optimistic",
    }
}

fn profile_line(profile: &PossibilityProfile) -> String {
    let parts: Vec<String> = (0..profile.space().len())
        .map(|i| format!("{}:{}", profile.space().name(i), profile.level(i)))
        .collect();
    format!("pi[{}]", parts.join(", "))
}

pub fn compare(
    path: &Path,
    act1: &str,
    act2: &str,
    rule: Option<RuleArg>,
    condition: Option<&str>,
) -> Result<ExitCode> {
    let problem = Problem::load(path)?;
    let rule = rule.unwrap_or_else(|| default_rule(&problem));
    if condition.is_some() && rule != RuleArg::LiftNecessity {
        bail!("--condition is only supported with --rule lift-necessity");
    }
    let f = problem.act(act1)?;
    let g = problem.act(act2)?;
    match rule {
        RuleArg::LiftNecessity => {
            let profile = problem.require_pi()?;
            let weak_fg = f.agreement_set(g)?;
            let weak_gf = g.agreement_set(f)?;
            let strict_fg = f.strict_agreement_set(g)?;
            let strict_gf = g.strict_agreement_set(f)?;
            match condition {
                Some(literal) => {
                    let given = parse_event_literal(&problem.space, literal)?;
                    let verdict = lift_compare_conditional(profile, f, g, &given)?;
                    let glit = given.to_set_literal();
                    println!(
                        "{act1} {} {act2}   (lift-necessity given {glit})",
                        verdict.symbol()
                    );
                    println!(
                        "  [{act1} >= {act2}] = {}    [{act2} >= {act1}] = {}",
                        weak_fg.to_set_literal(),
                        weak_gf.to_set_literal()
                    );
                    println!(
                        "  Pi([{act1} > {act2}] & {glit}) = {}    Pi([{act2} > {act1}] & {glit}) = {}",
                        profile.possibility_of(&strict_fg.intersection(&given))?,
                        profile.possibility_of(&strict_gf.intersection(&given))?
                    );
                }
                None => {
                    let cmp = UncertaintyComparator::Necessity(profile.clone());
                    let verdict = lift_compare(&cmp, f, g)?;
                    println!("{act1} {} {act2}   (lift-necessity)", verdict.symbol());
                    println!(
                        "  [{act1} >= {act2}] = {}    [{act2} >= {act1}] = {}",
                        weak_fg.to_set_literal(),
                        weak_gf.to_set_literal()
                    );
                    println!(
                        "  Pi([{act1} > {act2}]) = {}    Pi([{act2} > {act1}]) = {}",
                        profile.possibility_of(&strict_fg)?,
                        profile.possibility_of(&strict_gf)?
                    );
                }
            }
        }
        RuleArg::LiftQualprob => {
            let weights = problem.require_weights()?;
            let cmp = UncertaintyComparator::QualitativeProbability(weights.clone());
            let verdict = lift_compare(&cmp, f, g)?;
            let weak_fg = f.agreement_set(g)?;
            let weak_gf = g.agreement_set(f)?;
            println!("{act1} {} {act2}   (lift-qualprob)", verdict.symbol());
            println!(
                "  [{act1} >= {act2}] = {}    [{act2} >= {act1}] = {}",
                weak_fg.to_set_literal(),
                weak_gf.to_set_literal()
            );
            println!(
                "  P([{act1} >= {act2}]) = {}    P([{act2} >= {act1}]) = {}",
                weights.weight_of(&weak_fg)?,
                weights.weight_of(&weak_gf)?
            );
        }
        RuleArg::ConsequencePessimistic | RuleArg::ConsequenceOptimistic => {
            let profile = problem.require_pi()?;
            let relation = LikelihoodRelation::new(profile.clone());
            let attitude = if rule == RuleArg::ConsequencePessimistic {
                Attitude::Pessimistic
            } else {
                Attitude::Optimistic
            };
            let verdict = consequence_lift_compare(&relation, f, g, attitude)?;
            println!("{act1} {} {act2}   ({})", verdict.symbol(), rule_name(rule));
            for (x, y, xn, yn) in [(f, g, act1, act2), (g, f, act2, act1)] {
                let side = surely_reached_consequences(&relation, x, y)?;
                let names: Vec<&str> = side.iter().map(|&c| problem.scale.name(c)).collect();
                let summary = summarize_side(&problem, &side, attitude);
                println!("  B({xn} >= {yn}) = {{{}}}    {summary}", names.join(","));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn summarize_side(problem: &Problem, side: &[usize], attitude: Attitude) -> String {
    let ranks = side.iter().map(|&c| problem.scale.rank(c));
    match attitude {
        Attitude::Pessimistic => match ranks.min() {
            Some(r) => format!("worst rank {r}"),
            None => "empty".to_string(),
        },
        Attitude::Optimistic => match ranks.max() {
            Some(r) => format!("best rank {r}"),
            None => "empty".to_string(),
        },
    }
}

fn summarize_matrix(m: &PreferenceMatrix) -> String {
    if let Some(cycle) = m.strict_cycle() {
        let mut names: Vec<&str> = cycle.iter().map(|&i| m.name(i)).collect();
        names.push(m.name(cycle[0]));
        return format!("strict-preference cycle: {}", names.join(" > "));
    }
    let n = m.len();
    let all_equivalent = (0..n).all(|i| (0..n).all(|j| i == j || m.verdict(i, j).is_equivalent()));
    if all_equivalent {
        return "all acts indifferent".to_string();
    }
    let wins = |i: usize| (0..n).filter(|&j| m.verdict(i, j).is_strict()).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(wins(i)));
    let mut out = String::from("order: ");
    for (k, &i) in order.iter().enumerate() {
        if k > 0 {
            out.push_str(&format!(" {} ", m.verdict(order[k - 1], i).symbol()));
        }
        out.push_str(m.name(i));
    }
    out
}

fn build_matrix(problem: &Problem, rule: RuleArg) -> Result<PreferenceMatrix> {
    match rule {
        RuleArg::LiftNecessity => {
            let cmp = UncertaintyComparator::Necessity(problem.require_pi()?.clone());
            Ok(preference_matrix(&cmp, &problem.acts)?)
        }
        RuleArg::LiftQualprob => {
            let cmp =
                UncertaintyComparator::QualitativeProbability(problem.require_weights()?.clone());
            Ok(preference_matrix(&cmp, &problem.acts)?)
        }
        RuleArg::ConsequencePessimistic | RuleArg::ConsequenceOptimistic => {
            let relation = LikelihoodRelation::new(problem.require_pi()?.clone());
            let attitude = if rule == RuleArg::ConsequencePessimistic {
                Attitude::Pessimistic
            } else {
                Attitude::Optimistic
            };
            Ok(consequence_preference_matrix(
                &relation,
                &problem.acts,
                attitude,
            )?)
        }
    }
}

pub fn matrix(path: &Path, rule: Option<RuleArg>) -> Result<ExitCode> {
    let problem = Problem::load(path)?;
    if problem.acts.is_empty() {
        bail!("the problem file declares no acts");
    }
    let rule = rule.unwrap_or_else(|| default_rule(&problem));
    let m = build_matrix(&problem, rule)?;
    println!("preference matrix   ({})", rule_name(rule));
    print!("{m}");
    println!("{}", summarize_matrix(&m));
    Ok(ExitCode::SUCCESS)
}

pub fn nm(path: &Path, context: &str, conclusion: &str) -> Result<ExitCode> {
    let problem = Problem::load(path)?;
    let profile = problem.require_pi()?;
    let a = parse_event_literal(&problem.space, context)?;
    let b = parse_event_literal(&problem.space, conclusion)?;
    let holds = nm_entails(profile, &a, &b)?;
    let inside = profile.possibility_of(&a.intersection(&b))?;
    let outside = profile.possibility_of(&a.difference(&b))?;
    println!(
        "{} {} {}",
        a.to_set_literal(),
        if holds { "|~" } else { "|/~" },
        b.to_set_literal()
    );
    println!("  Pi(A & B) = {inside}    Pi(A & !B) = {outside}");
    Ok(ExitCode::SUCCESS)
}

fn lift_rule_for_check(rule: Option<RuleArg>, problem: Option<&Problem>) -> Result<LiftRule> {
    match rule {
        None => Ok(match problem {
            Some(p) if p.pi.is_none() && p.weights.is_some() => LiftRule::QualitativeProbability,
            _ => LiftRule::Necessity,
        }),
        Some(RuleArg::LiftNecessity) => Ok(LiftRule::Necessity),
        Some(RuleArg::LiftQualprob) => Ok(LiftRule::QualitativeProbability),
        Some(other) => bail!(
            "suites accept --rule lift-necessity or lift-qualprob, not {}",
            rule_name(other)
        ),
    }
}

fn file_comparator(problem: &Problem, rule: LiftRule) -> Result<UncertaintyComparator> {
    Ok(match rule {
        LiftRule::Necessity => UncertaintyComparator::Necessity(problem.require_pi()?.clone()),
        LiftRule::QualitativeProbability => {
            UncertaintyComparator::QualitativeProbability(problem.require_weights()?.clone())
        }
    })
}

pub fn check(
    suite: &str,
    file: Option<&Path>,
    bounds: &SearchBounds,
    rule: Option<RuleArg>,
) -> Result<ExitCode> {
    let key = suite.to_ascii_lowercase().replace('-', "");
    let reports: Vec<CheckReport> = match file {
        Some(path) => {
            let problem = Problem::load(path)?;
            match key.as_str() {
                "p1prime" => {
                    let lift = lift_rule_for_check(rule, Some(&problem))?;
                    let cmp = file_comparator(&problem, lift)?;
                    vec![check_p1prime_on(&cmp, &problem.acts, bounds)?]
                }
                "systemp" => {
                    let profile = problem
                        .require_pi()
                        .map_err(|e| anyhow!("suite systemP: {e}"))?;
                    system_p_suite_on(profile, bounds)?
                }
                "representation" => {
                    let profile = problem.require_pi()?;
                    vec![check_roundtrip_on(&problem.space, &problem.scale, profile, bounds)?]
                }
                "axioms" => {
                    let lift = lift_rule_for_check(rule, Some(&problem))?;
                    let cmp = file_comparator(&problem, lift)?;
                    let relation = ExplicitRelation::from_ordering(&cmp)?;
                    let family = match lift {
                        LiftRule::Necessity => AxiomFamily::NecessityOrdering,
                        LiftRule::QualitativeProbability => AxiomFamily::QualitativeProbability,
                    };
                    vec![check_axioms_of_relation(&relation, family)?]
                }
                "savage" | "surething" | "p3p4u" | "likelihood" | "events" | "all" => {
                    bail!("suite {suite} enumerates models from bounds; omit the file")
                }
                _ => bail!("unknown suite '{suite}'"),
            }
        }
        None => match key.as_str() {
            "savage" => savage_suite(bounds)?,
            "p1prime" => vec![check_p1prime(lift_rule_for_check(rule, None)?, bounds)?],
            "surething" => vec![check_sure_thing(bounds)?],
            "p3p4u" => check_p3_p4_u(bounds)?,
            "systemp" => system_p_suite(bounds)?,
            "likelihood" => likelihood_suite(bounds)?,
            "events" => check_event_properties(bounds)?,
            "representation" => vec![check_representation_roundtrip(bounds)?],
            "all" => {
                let mut all = savage_suite(bounds)?;
                all.extend(system_p_suite(bounds)?);
                all.extend(likelihood_suite(bounds)?);
                all.push(check_representation_roundtrip(bounds)?);
                all
            }
            "axioms" => bail!("suite axioms needs a problem file"),
            _ => bail!(
                "unknown suite '{suite}'; available: savage, p1prime, sure-thing, p3p4u, systemP, likelihood, events, representation, axioms, all"
            ),
        },
    };

    let mut failed = false;
    for report in &reports {
        print!("{report}");
        match report.outcome {
            CheckOutcome::Counterexample(_) | CheckOutcome::Exhausted => failed = true,
            CheckOutcome::Pass | CheckOutcome::WitnessFound(_) => {}
        }
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

pub fn search(property: &str, bounds: &SearchBounds) -> Result<ExitCode> {
    let prop = SearchProperty::from_name(property).ok_or_else(|| {
        let names: Vec<&str> = SearchProperty::ALL.iter().map(|p| p.name()).collect();
        anyhow!(
            "unknown search property '{property}'; available: {}",
            names.join(", ")
        )
    })?;
    let report = search_counterexample(prop, bounds)?;
    print!("{report}");
    match &report.outcome {
        CheckOutcome::WitnessFound(w) => {
            let verified = w.reverify()?;
            println!("witness re-verified: {verified}");
            Ok(if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        _ => Ok(ExitCode::from(1)),
    }
}

fn act_table(fx: &Fixture) -> String {
    let names = fx.act_names();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["act".to_string()];
    header.extend(fx.space.names().map(str::to_string));
    rows.push(header);
    for name in &names {
        let act = fx.act(name);
        let mut row = vec![name.clone()];
        for s in 0..fx.space.len() {
            let outcome = act.outcome_name(s);
            row.push(format!(
                "{outcome} ({})",
                fx.scale.rank_of(outcome).unwrap()
            ));
        }
        rows.push(row);
    }
    render_columns(&rows)
}

fn render_columns(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width = |c: usize| {
        rows.iter()
            .filter_map(|r| r.get(c))
            .map(String::len)
            .max()
            .unwrap_or(0)
    };
    let widths: Vec<usize> = (0..cols).map(width).collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{cell:<w$}", w = widths[c]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn demo_omelette_regimes(fx: &Fixture) -> Result<()> {
    let regimes = [
        ("fresh more plausible", fx.profile_fresh_likely()),
        ("rotten more plausible", fx.profile_rotten_likely()),
        ("equal plausibility", fx.profile_equal()),
    ];
    for (label, profile) in regimes {
        let cmp = UncertaintyComparator::Necessity(profile.clone());
        let m = preference_matrix(&cmp, &fx.named_acts())?;
        println!("regime: {label}   {}", profile_line(&profile));
        print!("{m}");
        println!("{}", summarize_matrix(&m));
        println!();
    }
    println!(
        "conclusion: break the egg into the omelette when fresh is the more plausible state,\n\
         throw it away when rotten is, and choose freely under equal plausibility."
    );
    Ok(())
}

fn demo_omelette_consequence(fx: &Fixture, attitude: Attitude, equal_pi: bool) -> Result<()> {
    let profile = if equal_pi {
        fx.profile_equal()
    } else {
        fx.profile_fresh_likely()
    };
    let relation = LikelihoodRelation::new(profile.clone());
    let m = consequence_preference_matrix(&relation, &fx.named_acts(), attitude)?;
    let label = match attitude {
        Attitude::Pessimistic => "consequence-pessimistic",
        Attitude::Optimistic => "consequence-optimistic",
    };
    println!("rule: {label}   {}", profile_line(&profile));
    print!("{m}");
    println!("{}", summarize_matrix(&m));
    Ok(())
}

fn demo_omelette(rule: Option<RuleArg>, equal_pi: bool) -> Result<()> {
    let fx = fixtures::omelette();
    println!("Savage's omelette: five eggs are in; the sixth may be fresh or rotten.");
    println!(
        "Break it into the omelette (BIO), break it apart in a cup (BAC), or throw it away (TA)?"
    );
    println!();
    print!("{}", act_table(&fx));
    println!();
    match rule {
        None | Some(RuleArg::LiftNecessity) => demo_omelette_regimes(&fx),
        Some(RuleArg::ConsequencePessimistic) => {
            demo_omelette_consequence(&fx, Attitude::Pessimistic, equal_pi)
        }
        Some(RuleArg::ConsequenceOptimistic) => {
            demo_omelette_consequence(&fx, Attitude::Optimistic, equal_pi)
        }
        Some(RuleArg::LiftQualprob) => {
            bail!("demo omelette supports lift-necessity and the consequence rules")
        }
    }
}

fn demo_condorcet(rule: Option<RuleArg>) -> Result<()> {
    if !matches!(rule, None | Some(RuleArg::LiftQualprob)) {
        bail!("demo condorcet runs under lift-qualprob");
    }
    let fx = fixtures::condorcet();
    println!("A Condorcet-style cycle under comparative probability.");
    println!();
    let mut rows = Vec::new();
    let mut header = vec!["state".to_string()];
    header.extend(fx.space.names().map(str::to_string));
    rows.push(header);
    let mut weight_row = vec!["weight".to_string()];
    for s in 0..fx.space.len() {
        weight_row.push(fx.weights.weight(s).to_string());
    }
    rows.push(weight_row);
    for name in fx.act_names() {
        let act = fx.act(&name);
        let mut row = vec![name.clone()];
        for s in 0..fx.space.len() {
            row.push(act.outcome_name(s).to_string());
        }
        rows.push(row);
    }
    print!("{}", render_columns(&rows));
    println!();

    let cmp = UncertaintyComparator::QualitativeProbability(fx.weights.clone());
    for (a, b) in [("f", "g"), ("g", "h"), ("h", "f")] {
        let fa = fx.act(a);
        let fb = fx.act(b);
        let verdict = lift_compare(&cmp, fa, fb)?;
        let side_a = fa.agreement_set(fb)?;
        let side_b = fb.agreement_set(fa)?;
        println!(
            "{a} {} {b}: P([{a} >= {b}]) = P({}) = {}  vs  P([{b} >= {a}]) = P({}) = {}",
            verdict.symbol(),
            side_a.to_set_literal(),
            fx.weights.weight_of(&side_a)?,
            side_b.to_set_literal(),
            fx.weights.weight_of(&side_b)?
        );
    }
    println!();
    let m = preference_matrix(&cmp, &fx.named_acts())?;
    println!("{}", summarize_matrix(&m));
    println!("each pairwise winner carries 5/9 against 4/9, yet no act survives the cycle.");
    Ok(())
}

pub fn demo(name: &str, rule: Option<RuleArg>, equal_pi: bool) -> Result<ExitCode> {
    match name.to_ascii_lowercase().as_str() {
        "omelette" => demo_omelette(rule, equal_pi)?,
        "condorcet" => demo_condorcet(rule)?,
        _ => bail!("unknown demo '{name}'; available: omelette, condorcet"),
    }
    Ok(ExitCode::SUCCESS)
}
