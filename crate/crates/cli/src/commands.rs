//! Subcommand implementations. Each produces a JSON value and a text
//! rendering; `main` prints whichever was requested.

use crate::args::*;
use crate::chain::{unite_conquer_chain, ChainParams};
use crate::config::Config;
use crate::input::{convert, formula_arg, graph6_lines, graph_arg, pairs_arg, read_stdin};
use crate::scenarios::{run_scenario, Report, SCENARIOS};
use crate::{CliError, EXIT_ASSERTION};
use fodepth::analysis::{
    bs_spectrum, cd_pair, component_count_bound_check, estimate_sentence_probability, extension_property,
    identification, random_bs_sentence, strategy_sieve, tower_table, two_switch_witness, weak_sieve, Metric,
};
use fodepth::constructions::{is_diverging, pad_recipe, unite_conquer_recipe, Construction, Provenance};
use fodepth::emit::{
    delta, extension_sentence, generic_defining, hintikka, padding_sentence, path_sentence, DeltaStyle,
};
use fodepth::games::{alt_report, depth_report, pebble_report, play, width_report, GameLimits, GameReport, Strategy};
use fodepth::graph::{
    automorphism_count, generate, has_twins, iso, metrics, to_graph6, tree_code, tree_separator, twins, Family, Graph,
};
use fodepth::logic::{measure, Compiled, Formula};
use fodepth::rng::seeded;
use fodepth::wl::{refine, verdict, Version};
use serde::Serialize;
use serde_json::{json, Value};

/// A command's result.
pub struct Output {
    pub json: Value,
    pub text: String,
    /// Process exit code (0 unless a scenario assertion failed).
    pub exit: i32,
}

impl Output {
    fn new(json: Value, text: impl Into<String>) -> Output {
        Output { json, text: text.into(), exit: 0 }
    }

    /// Text rendering as one `key: value` line per top-level field.
    fn keyed(json: Value) -> Output {
        let text = match &json {
            Value::Object(map) => map
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}: {s}"),
                    other => format!("{k}: {other}"),
                })
                .collect::<Vec<_>>()
                .join("\n"),
            other => other.to_string(),
        };
        Output::new(json, text)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values serialise"),
            Format::Text => self.text.clone(),
        }
    }
}

fn to_json(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("reports serialise")
}

fn need_seed(seed: Option<u64>, what: &str) -> Result<u64, CliError> {
    seed.ok_or_else(|| CliError::Usage(format!("{what} is stochastic; pass --seed <u64>")))
}

fn config_for(cli: &Cli) -> Result<Config, CliError> {
    Ok(match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::builtin(),
    })
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Gen { family } => gen(family, cli.seed),
        Command::Wl { command } => wl(command),
        Command::Game { game } => game_command(game),
        Command::Define { sentence } => define(sentence),
        Command::Check { formula, graphs } => check(formula, graphs),
        Command::Analyze(args) => analyze(args),
        Command::Experiment { experiment } => experiment_command(experiment, cli.seed),
        Command::Spectrum { formula, max_order } => {
            let report = bs_spectrum(&formula_arg(formula)?, *max_order)?;
            let text = format!("{}\nspectrum up to {max_order}: {:?}", report.sentence, report.members());
            Ok(Output::new(to_json(&report), text))
        }
        Command::Convert { from, to, input } => {
            let text = match input.as_deref() {
                Some(arg) => match arg.strip_prefix('@') {
                    Some(path) => crate::input::read_file(path)?,
                    None => arg.replace("\\n", "\n"),
                },
                None => read_stdin()?,
            };
            let converted = convert(&text, *from, *to)?;
            Ok(Output::new(json!({ "output": converted }), converted.trim_end()))
        }
        Command::RunScenario(args) => run_scenarios(args, cli),
    }
}

fn graph_output(g: &Graph, provenance: Option<Provenance>) -> Output {
    let code = to_graph6(g);
    let mut json = json!({ "graph6": code, "order": g.order(), "edges": g.edge_count() });
    if let Some(p) = provenance {
        json["provenance"] = to_json(p);
    }
    Output::new(json, code)
}

fn gen(family: &GenFamily, seed: Option<u64>) -> Result<Output, CliError> {
    let plain =
        |f: Family, seed: Option<u64>| -> Result<Output, CliError> { Ok(graph_output(&generate(&f, seed)?, None)) };
    let built = |c: Construction| -> Result<Output, CliError> {
        let (g, provenance) = c.build()?;
        Ok(graph_output(&g, Some(provenance)))
    };
    let graphs = |args: &[String]| args.iter().map(|a| graph_arg(a)).collect::<Result<Vec<_>, _>>();
    match family {
        GenFamily::Path { n } => plain(Family::Path(*n), None),
        GenFamily::Cycle { n } => plain(Family::Cycle(*n), None),
        GenFamily::Complete { n } => plain(Family::Complete(*n), None),
        GenFamily::Empty { n } => plain(Family::Empty(*n), None),
        GenFamily::Star { leaves } => plain(Family::Star(*leaves), None),
        GenFamily::Gnp { n, p } => plain(Family::Gnp { n: *n, p: *p }, Some(need_seed(seed, "gen gnp")?)),
        GenFamily::Tree { n } => plain(Family::RandomTree(*n), Some(need_seed(seed, "gen tree")?)),
        GenFamily::Union { graphs: args } => plain(Family::DisjointUnion(graphs(args)?), None),
        GenFamily::Complement { graph } => plain(Family::Complement(graph_arg(graph)?), None),
        GenFamily::Pad { graph } => built(pad_recipe(&graph_arg(graph)?)),
        GenFamily::UniteConquer { graphs: args } => built(unite_conquer_recipe(&graphs(args)?)),
        GenFamily::AsymTree { k, allow_large } => {
            built(Construction::UniversalAsymmetricTree { radius: *k, allow_large: *allow_large })
        }
    }
}

fn version(options: &WlOptions) -> Version {
    if options.count_free {
        Version::CountFree
    } else {
        Version::Standard
    }
}

fn wl(command: &WlCommand) -> Result<Output, CliError> {
    match command {
        WlCommand::Run { g, h, options, rounds } => {
            let g = graph_arg(g)?;
            let h = h.as_deref().map(graph_arg).transpose()?;
            let v = version(options);
            let c = refine(&g, h.as_ref(), options.k, v, *rounds)?;
            let mut json = json!({
                "k": options.k,
                "version": v,
                "rounds": c.last_round(),
                "stable": c.is_stable(),
                "stab_g": c.stab_g(),
                "class_counts": c.class_counts(),
            });
            let mut text = format!(
                "k = {}, {} rounds, stable = {}, classes per round {:?}",
                options.k,
                c.last_round(),
                c.is_stable(),
                c.class_counts()
            );
            if h.is_some() {
                let full = (0..=c.last_round()).find(|&r| !c.full_equal(r));
                let diag = (0..=c.last_round()).find(|&r| !c.diag_equal(r));
                json["first_separation"] = to_json(full);
                json["first_diag_separation"] = to_json(diag);
                text.push_str(&format!("\nfirst separation {full:?}, first diagonal separation {diag:?}"));
            }
            Ok(Output::new(json, text))
        }
        WlCommand::Stab { g, options } => {
            let g = graph_arg(g)?;
            let c = refine(&g, None, options.k, version(options), None)?;
            let stab = c.stab_g();
            Ok(Output::new(json!({ "k": options.k, "version": version(options), "stab": stab }), format!("{stab:?}")))
        }
        WlCommand::Verdict { g, h, options } => {
            let (g, h) = (graph_arg(g)?, graph_arg(h)?);
            let verdict = verdict(&g, &h, options.k, version(options))?;
            Ok(Output::new(
                json!({ "k": options.k, "version": version(options), "verdict": verdict }),
                format!("{verdict:?}"),
            ))
        }
    }
}

fn game_output(report: GameReport) -> Output {
    let text = format!("value {} ({} configurations)", report.value, report.configs_visited);
    Output::new(to_json(report), text)
}

fn game_command(game: &GameCommand) -> Result<Output, CliError> {
    let limits = GameLimits::default();
    let pair = |g: &str, h: &str| -> Result<(Graph, Graph), CliError> { Ok((graph_arg(g)?, graph_arg(h)?)) };
    match game {
        GameCommand::Depth { g, h } => {
            let (g, h) = pair(g, h)?;
            Ok(game_output(depth_report(&g, &h, &limits)?))
        }
        GameCommand::Pebble { g, h, pebbles } => {
            let (g, h) = pair(g, h)?;
            Ok(game_output(pebble_report(&g, &h, *pebbles, &limits)?))
        }
        GameCommand::Width { g, h } => {
            let (g, h) = pair(g, h)?;
            Ok(game_output(width_report(&g, &h, &limits)?))
        }
        GameCommand::Alt { g, h, alternations } => {
            let (g, h) = pair(g, h)?;
            Ok(game_output(alt_report(&g, &h, *alternations, &limits)?))
        }
        GameCommand::Play { g, h, strategy, initial, cap, sieve } => {
            let (g, h) = pair(g, h)?;
            let initial = pairs_arg(initial)?;
            let strategy = match strategy {
                StrategyName::Halving => Strategy::HalvingDistance,
                StrategyName::Tree => Strategy::TreeSeparator,
                StrategyName::Sieve => Strategy::WeakSieve {
                    sieve: match sieve {
                        Some(list) => list
                            .split(',')
                            .map(|s| s.trim().parse().map_err(|_| CliError::Usage(format!("bad sieve vertex `{s}`"))))
                            .collect::<Result<_, _>>()?,
                        None => strategy_sieve(&g)?,
                    },
                },
            };
            let report = play(&g, &h, &strategy, &initial, *cap)?;
            let text = format!("{:?} ({} configurations)", report.outcome, report.configs_visited);
            Ok(Output::new(to_json(report), text))
        }
    }
}

fn style(s: Style) -> DeltaStyle {
    match s {
        Style::Naive => DeltaStyle::Naive,
        Style::Halving => DeltaStyle::Halving,
        Style::ThreeVar => DeltaStyle::ThreeVar,
    }
}

fn formula_output(f: &Formula) -> Output {
    let metrics = measure(f);
    let text = f.to_string();
    Output::new(json!({ "formula": text, "metrics": metrics }), text)
}

fn define(sentence: &DefineCommand) -> Result<Output, CliError> {
    let f = match sentence {
        DefineCommand::Generic { graph } => generic_defining(&graph_arg(graph)?)?,
        DefineCommand::Hintikka { graph, rounds } => hintikka(&graph_arg(graph)?, *rounds)?,
        DefineCommand::Delta { n, style: s } => delta(*n, style(*s))?,
        DefineCommand::Path { n, style: s } => path_sentence(*n, style(*s))?,
        DefineCommand::Extension { k } => extension_sentence(*k)?,
        DefineCommand::Padding { formula } => padding_sentence(&formula_arg(formula)?)?,
        DefineCommand::Measure { formula } => formula_arg(formula)?,
    };
    Ok(formula_output(&f))
}

fn check(formula: &str, graphs: &[String]) -> Result<Output, CliError> {
    let phi = formula_arg(formula)?;
    let inputs = if graphs.is_empty() {
        graph6_lines(&read_stdin()?)?
    } else {
        graphs.iter().map(|g| graph_arg(g)).collect::<Result<Vec<_>, _>>()?
    };
    let compiled = Compiled::new(&phi);
    let mut rows = Vec::new();
    let mut text = Vec::new();
    for g in &inputs {
        let holds = compiled.holds(g)?;
        text.push(format!("{} {holds}", to_graph6(g)));
        rows.push(json!({ "graph6": to_graph6(g), "holds": holds }));
    }
    Ok(Output::new(json!({ "formula": phi.to_string(), "results": rows }), text.join("\n")))
}

fn analyze(args: &AnalyzeArgs) -> Result<Output, CliError> {
    let g = graph_arg(&args.graph)?;
    let mut json = json!({
        "graph6": to_graph6(&g),
        "metrics": metrics(&g),
        "has_twins": has_twins(&g),
        "twins": twins(&g),
        "weak_sieve": weak_sieve(&g),
        "extension_property": (1..=3).map(|k| (k, extension_property(&g, k))).collect::<Vec<_>>(),
        "automorphisms": automorphism_count(&g).ok(),
    });
    if g.is_tree() {
        json["tree"] = json!({
            "code": tree_code(&g)?.iter().map(|b| format!("{b}")).collect::<String>(),
            "diverging": is_diverging(&g)?,
            "separator": tree_separator(&g)?,
        });
    }
    if let Some(metric) = args.identification {
        let metric = match metric {
            IdentificationMetric::Depth => Metric::Depth,
            IdentificationMetric::Width => Metric::Width,
            IdentificationMetric::CountingDepth => Metric::CountingDepth(args.k),
            IdentificationMetric::CountingWidth => Metric::CountingWidth,
        };
        json["identification"] = to_json(identification(&g, metric)?);
    }
    Ok(Output::keyed(json))
}

fn experiment_command(experiment: &ExperimentCommand, seed: Option<u64>) -> Result<Output, CliError> {
    match experiment {
        ExperimentCommand::Probability { formula, order, samples } => {
            let seed = need_seed(seed, "experiment probability")?;
            let phi = formula_arg(formula)?;
            let p = estimate_sentence_probability(&phi, *order, *samples, seed)?;
            Ok(Output::keyed(json!({
                "formula": phi.to_string(), "order": order, "samples": samples, "seed": seed, "fraction": p
            })))
        }
        ExperimentCommand::ComponentBound { graph } => {
            Ok(Output::keyed(to_json(component_count_bound_check(&graph_arg(graph)?)?)))
        }
        ExperimentCommand::Towers => Ok(Output::keyed(to_json(tower_table()))),
        ExperimentCommand::TwoSwitch { graph } => {
            let g = graph_arg(graph)?;
            let json = match two_switch_witness(&g) {
                Some(h) => json!({
                    "witness": to_graph6(&h),
                    "non_isomorphic": !iso(&g, &h),
                    "counting_depth_k1": cd_pair(&g, &h, 1)?,
                }),
                None => json!({ "witness": null }),
            };
            Ok(Output::keyed(json))
        }
        ExperimentCommand::UniteChain { order, max_depth, levels, class_limit, check_pairs } => {
            let params = ChainParams {
                order: *order,
                max_depth: *max_depth,
                levels: *levels,
                class_limit: *class_limit,
                check_pairs: *check_pairs,
            };
            let report = unite_conquer_chain(&params)?;
            let text = report
                .levels
                .iter()
                .map(|l| {
                    let worst = l.pair_checks.iter().map(|p| p.depth).max();
                    format!(
                        "level {}: {} graphs of order {}, depth bound {}, diameter 2: {}, checked pairs {} (worst {:?}, refused {})",
                        l.level, l.class_size, l.member_order, l.depth_bound, l.all_diameter_two, l.pair_checks.len(), worst, l.pairs_refused
                    )
                })
                .chain(report.notes.iter().map(|n| format!("note: {n}")))
                .collect::<Vec<_>>()
                .join("\n");
            let exit = if report.consistent() { 0 } else { EXIT_ASSERTION };
            Ok(Output { json: to_json(&report), text, exit })
        }
        ExperimentCommand::BsSentences { count, existential, universal, clauses, max_order } => {
            let seed = need_seed(seed, "experiment bs-sentences")?;
            let mut rng = seeded(seed);
            let reports = (0..*count)
                .map(|_| bs_spectrum(&random_bs_sentence(&mut rng, *existential, *universal, *clauses), *max_order))
                .collect::<Result<Vec<_>, _>>()?;
            let text =
                reports.iter().map(|r| format!("{:?}  {}", r.members(), r.sentence)).collect::<Vec<_>>().join("\n");
            Ok(Output::new(to_json(&reports), text))
        }
    }
}

fn run_scenarios(args: &RunScenarioArgs, cli: &Cli) -> Result<Output, CliError> {
    if args.list {
        let list: Vec<Value> = SCENARIOS
            .iter()
            .map(|s| json!({ "name": s.name, "criterion": s.criterion, "title": s.title, "stochastic": s.is_stochastic() }))
            .collect();
        let text =
            SCENARIOS.iter().map(|s| format!("{:>2} {:<24} {}", s.criterion, s.name, s.title)).collect::<Vec<_>>();
        return Ok(Output::new(Value::Array(list), text.join("\n")));
    }
    let config = config_for(cli)?;
    let names: Vec<&str> = match &args.name {
        Some(name) => vec![name.as_str()],
        None => SCENARIOS.iter().map(|s| s.name).collect(),
    };
    let reports = names.iter().map(|n| run_scenario(n, &config, cli.seed)).collect::<Result<Vec<Report>, _>>()?;
    let json = if args.name.is_some() { to_json(&reports[0]) } else { to_json(&reports) };
    if let Some(path) = &args.out {
        let body = serde_json::to_string_pretty(&json).expect("reports serialise");
        std::fs::write(path, body + "\n")
            .map_err(|source| CliError::Io { context: format!("writing {}", path.display()), source })?;
    }
    let text = reports.iter().map(Report::to_text).collect::<String>();
    let passed = reports.iter().all(|r| r.passed);
    Ok(Output { json, text: text.trim_end().to_string(), exit: if passed { 0 } else { EXIT_ASSERTION } })
}
