//! The `ore` command line. Every subcommand emits one JSON report; the exit
//! code is 0 on success, 1 if any record failed and 2 on usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::complexes::{
    build_e, descending_link, e_to_matching_map, grounded_certificate, homological_connectivity,
    matching_complex, positive_sublevel_complex, reduced_homology, SimplicialComplex,
};
use crate::error::{OreError, Result};
use crate::forest::{
    component_reachable, enumerate_elementary, garside_delta, irreducible_descendants, normal_form, Forest,
};
use crate::fraction::FractionElement;
use crate::report::{Record, Report};
use crate::rewrite::{
    apply_rule, bad_graph, basilica_graph, build_e_graph, check_iso_action, check_ore_laws, contract,
    find_coexpansions, pattern_orbits, single_edge, MultiGraph, Rule,
};
use crate::units::{lift, BraidWord};
use crate::verify;
use crate::zs::{act, check_ip_axioms, CorruptedV, Family};

#[derive(Parser, Debug)]
#[command(name = "ore", version, about = "Thompson-like groups from Ore categories")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Arithmetic in the fraction groups.
    Group {
        op: GroupOp,
        #[arg(long, default_value = "F")]
        family: String,
        #[arg(long)]
        arity: Option<usize>,
        #[arg(long = "in", num_args = 1..)]
        inputs: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        base: usize,
        /// Leaves of a random element; exponent for `pow`.
        #[arg(long)]
        n: Option<usize>,
        /// Search bound for `order`.
        #[arg(long, default_value_t = 64)]
        bound: usize,
    },
    /// Forests: normal forms, divisibility and Garside structure.
    Forest {
        op: ForestOp,
        /// Forests as `F(roots;word)` or, for `normal-form`/`confluence`, a raw word `1,3,2`.
        operands: Vec<String>,
        #[arg(long = "in", num_args = 1..)]
        inputs: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        arity: usize,
    },
    /// Braid words, Garside normal forms and projections.
    Braid {
        op: BraidOp,
        /// Words such as `1,-2,1`; an empty string is the identity.
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Build a complex and print it with its f-vector.
    Complex {
        kind: ComplexKind,
        /// Graph family `L`, `C` or `K` for matching complexes.
        #[arg(long, default_value = "L")]
        graph: String,
        #[arg(long, default_value = "F")]
        family: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        arity: usize,
        /// A tree for `descending-link`, as `F(1;...)` or a JSON file.
        #[arg(long = "in")]
        input: Option<String>,
    },
    /// Reduced integral homology.
    Homology {
        #[command(flatten)]
        src: ComplexSource,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// Grounded connectivity certificate, optionally checked against homology.
    Grounded {
        #[command(flatten)]
        src: ComplexSource,
        /// Also compute homology up to this dimension and compare.
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        /// `corrupted-V` runs `ip-axioms` on a deliberately broken V table.
        #[arg(long, default_value = "V")]
        family: String,
        #[arg(long)]
        arity: Option<usize>,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Edge-replacement rewriting.
    Rewrite {
        op: RewriteOp,
        #[arg(long, default_value = "basilica")]
        rule: String,
        /// JSON graph file, or one of `basilica`, `edge`, `bad1`, `bad2`, `bad3`.
        #[arg(long, default_value = "basilica")]
        graph: String,
        #[arg(long)]
        edge: Option<String>,
        /// Edge cap for the iso-action check.
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
}

#[derive(clap::Args, Debug)]
struct ComplexSource {
    /// A complex JSON file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Matching complex of `L`, `C` or `K` when no file is given.
    #[arg(long, default_value = "L")]
    graph: String,
    #[arg(long, default_value_t = 4)]
    n: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GroupOp {
    Identity,
    Random,
    Mul,
    Inv,
    Pow,
    Eq,
    Order,
    Reduce,
    Project,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ForestOp {
    NormalForm,
    Confluence,
    Compose,
    Lcm,
    Gcd,
    LeftQuotient,
    RightQuotient,
    Head,
    Factor,
    Delta,
    Elementary,
    Components,
    Act,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum BraidOp {
    NormalForm,
    Eq,
    Mul,
    Inv,
    Project,
    Lift,
    Delta,
    Crossings,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ComplexKind {
    Matching,
    E,
    DescendingLink,
    Sublevel,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    NormalForm,
    Lattice,
    IpAxioms,
    BvRelations,
    RotationAction,
    PiEquivariance,
    Group,
    EComplexes,
    Connectivity,
    DescendingLinks,
    Basilica,
    BraidKernel,
    Components,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum RewriteOp {
    Apply,
    Patterns,
    Contract,
    Eh,
    Check,
}

/// Every subcommand and operation, for coverage checks.
pub const COMMANDS: &[(&str, &[&str])] = &[
    ("group", &["identity", "random", "mul", "inv", "pow", "eq", "order", "reduce", "project"]),
    (
        "forest",
        &[
            "normal-form", "confluence", "compose", "lcm", "gcd", "left-quotient", "right-quotient", "head",
            "factor", "delta", "elementary", "components", "act",
        ],
    ),
    ("braid", &["normal-form", "eq", "mul", "inv", "project", "lift", "delta", "crossings"]),
    ("complex", &["matching", "e", "descending-link", "sublevel"]),
    ("homology", &[]),
    ("grounded", &[]),
    (
        "verify",
        &[
            "normal-form", "lattice", "ip-axioms", "bv-relations", "rotation-action", "pi-equivariance", "group",
            "e-complexes", "connectivity", "descending-links", "basilica", "braid-kernel", "components", "all",
        ],
    ),
    ("rewrite", &["apply", "patterns", "contract", "eh", "check"]),
];

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses and runs a command line (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let command = args.iter().skip(1).cloned().collect();
    let (records, result) = match dispatch(&cli) {
        Ok(x) => x,
        Err(e) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let report = Report::new(command, cli.seed, records, result);
    let code = if report.passed() { 0 } else { 1 };
    let mut text = report.to_json();
    text.push('\n');
    match &cli.out {
        Some(path) => match fs::write(path, &text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) },
        },
        None => Outcome { code, stdout: text, stderr: String::new() },
    }
}

type Output = (Vec<Record>, Option<Value>);

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.cmd {
        Cmd::Group { op, family, arity, inputs, base, n, bound } => {
            group(*op, family_of(family, *arity)?, inputs, *base, *n, *bound, cli.seed)
        }
        Cmd::Forest { op, operands, inputs, n, arity } => forest(*op, operands, inputs, *n, *arity),
        Cmd::Braid { op, words, n } => braid(*op, words, *n),
        Cmd::Complex { kind, graph, family, n, arity, input } => {
            complex(*kind, graph, family, *n, *arity, input.as_deref())
        }
        Cmd::Homology { src, max_dim } => {
            let x = load_complex(src)?;
            let groups = reduced_homology(&x, *max_dim)?;
            let conn = homological_connectivity(&x, *max_dim)?;
            Ok((
                Vec::new(),
                Some(json!({
                    "groups": groups.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "betti": groups.iter().map(|g| g.betti).collect::<Vec<_>>(),
                    "homology": groups,
                    "connectivity": conn,
                })),
            ))
        }
        Cmd::Grounded { src, max_dim } => {
            let x = load_complex(src)?;
            let cert = grounded_certificate(&x)?;
            let bound = cert.bound();
            let mut records = Vec::new();
            let mut result = json!({
                "certificate": cert,
                "bound": if bound == i64::MAX { Value::from("cone") } else { Value::from(bound) },
            });
            if let Some(md) = max_dim {
                let c = homological_connectivity(&x, *md)?;
                result["connectivity"] = c.into();
                let pass = if bound == i64::MAX { c == *md as i64 } else { bound.min(*md as i64) <= c };
                records.push(Record::judged("grounded/vs-snf", format!("max-dim {md}"), format!("<= {c}"), bound, pass));
            }
            Ok((records, Some(result)))
        }
        Cmd::Verify { suite, family, arity, bound, n } => {
            verify_suite(*suite, family, *arity, *bound, *n, cli.seed).map(|r| (r, None))
        }
        Cmd::Rewrite { op, rule, graph, edge, bound } => rewrite(*op, rule, graph, edge.as_deref(), *bound),
    }
}

fn parse_err(msg: impl Into<String>) -> OreError {
    OreError::Parse(msg.into())
}

fn family_of(s: &str, arity: Option<usize>) -> Result<Family> {
    let f: Family = s.parse()?;
    match arity {
        Some(d) => Family::new(f.kind, d),
        None => Ok(f),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| parse_err(format!("{}: {e}", path.display())))
}

/// Reads a bare object, or the object under `key` in a report's result.
fn read_input<T: DeserializeOwned>(path: &Path, key: &str) -> Result<T> {
    let v: Value = read_json(path)?;
    let inner = match v.get("schema") {
        Some(_) => v.get("result").and_then(|r| r.get(key)).cloned().unwrap_or(Value::Null),
        None => v,
    };
    serde_json::from_value(inner).map_err(|e| parse_err(format!("{}: {e}", path.display())))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn need<T>(v: &[T], k: usize, what: &str) -> Result<()> {
    if v.len() < k {
        return Err(parse_err(format!("{what} needs {k} operand(s), got {}", v.len())));
    }
    Ok(())
}

fn group(
    op: GroupOp,
    family: Family,
    inputs: &[PathBuf],
    base: usize,
    n: Option<usize>,
    bound: usize,
    seed: u64,
) -> Result<Output> {
    let xs = inputs.iter().map(|p| read_input::<FractionElement>(p, "element")).collect::<Result<Vec<_>>>()?;
    for x in &xs {
        x.validate()?;
        if x.family != family {
            return Err(OreError::FamilyMismatch(x.family.to_string(), family.to_string()));
        }
    }
    let elem = |x: &FractionElement| json!({ "element": to_value(x), "display": x.to_string() });
    let result = match op {
        GroupOp::Identity => elem(&FractionElement::identity(family, base)),
        GroupOp::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let leaves = n.unwrap_or(base + 3 * (family.arity - 1));
            elem(&FractionElement::random(family, base, leaves, 3, &mut rng)?)
        }
        GroupOp::Mul => {
            need(&xs, 1, "mul")?;
            let mut acc = xs[0].clone();
            for x in &xs[1..] {
                acc = acc.mul(x)?;
            }
            elem(&acc.reduce())
        }
        GroupOp::Inv => {
            need(&xs, 1, "inv")?;
            elem(&xs[0].inv())
        }
        GroupOp::Pow => {
            need(&xs, 1, "pow")?;
            elem(&xs[0].pow(n.unwrap_or(2))?.reduce())
        }
        GroupOp::Eq => {
            need(&xs, 2, "eq")?;
            json!({ "eq": xs[0].eq(&xs[1])? })
        }
        GroupOp::Order => {
            need(&xs, 1, "order")?;
            json!({ "order": xs[0].order(bound)?, "bound": bound })
        }
        GroupOp::Reduce => {
            need(&xs, 1, "reduce")?;
            elem(&xs[0].reduce())
        }
        GroupOp::Project => {
            need(&xs, 1, "project")?;
            elem(&xs[0].project_to_v()?)
        }
    };
    Ok((Vec::new(), Some(result)))
}

fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| parse_err(format!("bad caret index {t:?}"))))
        .collect()
}

fn forest_json(f: &Forest) -> Value {
    json!({ "forest": to_value(f), "display": f.to_string(), "leaves": f.leaves() })
}

fn forest(op: ForestOp, operands: &[String], inputs: &[PathBuf], n: usize, arity: usize) -> Result<Output> {
    let load = || -> Result<Vec<Forest>> {
        let mut fs = inputs.iter().map(|p| read_input::<Forest>(p, "forest")).collect::<Result<Vec<_>>>()?;
        for s in operands {
            fs.push(s.parse()?);
        }
        Ok(fs)
    };
    let result = match op {
        ForestOp::NormalForm => {
            need(operands, 1, "normal-form")?;
            forest_json(&normal_form(&parse_word(&operands[0])?, n, arity)?)
        }
        ForestOp::Confluence => {
            need(operands, 1, "confluence")?;
            let w = parse_word(&operands[0])?;
            let nf = normal_form(&w, n, arity)?;
            let irr = irreducible_descendants(&w, arity);
            let ok = irr.len() == 1 && irr[0] == nf.word();
            let rec = Record::judged("forest/confluence", operands[0].clone(), nf.to_string(), format!("{irr:?}"), ok);
            return Ok((vec![rec], Some(json!({ "irreducible": irr, "normal_form": forest_json(&nf) }))));
        }
        ForestOp::Compose | ForestOp::Lcm | ForestOp::Gcd | ForestOp::LeftQuotient | ForestOp::RightQuotient => {
            let fs = load()?;
            need(&fs, 2, "binary forest operation")?;
            let (a, b) = (&fs[0], &fs[1]);
            let r = match op {
                ForestOp::Compose => a.compose(b)?,
                ForestOp::Lcm => a.lcm(b)?,
                ForestOp::Gcd => a.gcd(b)?,
                ForestOp::LeftQuotient => a.left_quotient(b)?,
                _ => a.right_quotient(b)?,
            };
            forest_json(&r)
        }
        ForestOp::Head => {
            let fs = load()?;
            need(&fs, 1, "head")?;
            forest_json(&fs[0].head()?)
        }
        ForestOp::Factor => {
            let fs = load()?;
            need(&fs, 1, "factor")?;
            let parts: Vec<Value> = fs[0].greedy_factorization().iter().map(forest_json).collect();
            json!({ "factors": parts })
        }
        ForestOp::Delta => forest_json(&garside_delta(n, arity)),
        ForestOp::Elementary => {
            let es: Vec<String> = enumerate_elementary(n, arity).iter().map(ToString::to_string).collect();
            json!({ "count": es.len(), "forests": es })
        }
        ForestOp::Components => {
            let table: Vec<Vec<bool>> =
                (1..=n).map(|a| (1..=n).map(|b| component_reachable(a, b, arity)).collect()).collect();
            json!({ "objects": n, "hom_nonempty": table })
        }
        ForestOp::Act => {
            // operands: family, unit JSON, forest
            need(operands, 3, "act")?;
            let family: Family = operands[0].parse()?;
            let unit = serde_json::from_str(&operands[1]).map_err(|e| parse_err(format!("unit: {e}")))?;
            let unit = family.coerce(unit)?;
            let f: Forest = operands[2].parse()?;
            let (gf, gc) = act(&family, &unit, &f)?;
            json!({ "forest": forest_json(&gf), "unit": to_value(&gc), "unit_display": gc.to_string() })
        }
    };
    Ok((Vec::new(), Some(result)))
}

fn parse_braid(s: &str, n: usize) -> Result<BraidWord> {
    let w = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| parse_err(format!("bad braid letter {t:?}"))))
        .collect::<Result<Vec<i32>>>()?;
    BraidWord::new(n, w)
}

fn braid_json(b: &BraidWord) -> Value {
    json!({ "word": to_value(b), "display": b.to_string(), "normal_form": b.normal_form().to_string() })
}

fn braid(op: BraidOp, words: &[String], n: usize) -> Result<Output> {
    let bs = words.iter().map(|w| parse_braid(w, n)).collect::<Result<Vec<_>>>()?;
    let result = match op {
        BraidOp::NormalForm => {
            need(&bs, 1, "normal-form")?;
            braid_json(&bs[0])
        }
        BraidOp::Eq => {
            need(&bs, 2, "eq")?;
            json!({ "eq": bs[0].braid_eq(&bs[1])? })
        }
        BraidOp::Mul => {
            need(&bs, 1, "mul")?;
            let mut acc = bs[0].clone();
            for b in &bs[1..] {
                acc = acc.multiply(b)?;
            }
            braid_json(&acc)
        }
        BraidOp::Inv => {
            need(&bs, 1, "inv")?;
            braid_json(&bs[0].inverse())
        }
        BraidOp::Project => {
            need(&bs, 1, "project")?;
            json!({ "permutation": to_value(&bs[0].project()), "display": bs[0].project().to_string() })
        }
        BraidOp::Lift => {
            need(&bs, 1, "lift")?;
            braid_json(&lift(&bs[0].project()))
        }
        BraidOp::Delta => braid_json(&BraidWord::delta(n)),
        BraidOp::Crossings => {
            need(&bs, 1, "crossings")?;
            json!({ "crossings": bs[0].crossings() })
        }
    };
    Ok((Vec::new(), Some(result)))
}

fn graph_kind(s: &str) -> Result<char> {
    match s {
        "L" | "C" | "K" => Ok(s.chars().next().unwrap()),
        _ => Err(parse_err(format!("graph family must be L, C or K, got {s:?}"))),
    }
}

fn complex_json(x: &SimplicialComplex) -> Result<Value> {
    Ok(json!({ "complex": to_value(x), "dim": x.dim(), "f_vector": x.f_vector()? }))
}

fn complex(kind: ComplexKind, graph: &str, family: &str, n: usize, arity: usize, input: Option<&str>) -> Result<Output> {
    let result = match kind {
        ComplexKind::Matching => complex_json(&matching_complex(&verify::graph_family(graph_kind(graph)?, n)))?,
        ComplexKind::E => {
            let e = build_e(family_of(family, Some(arity))?, n)?;
            let m = e_to_matching_map(&e)?;
            let mut v = complex_json(&e.complex)?;
            v["matching_map"] = json!({
                "simplicial": m.simplicial,
                "surjective": m.surjective,
                "isomorphism": m.isomorphism,
                "fibers_are_joins": m.all_fibers_joins(),
                "vertex_map": m.vertex_map,
            });
            v
        }
        ComplexKind::DescendingLink => {
            let src = input.ok_or_else(|| parse_err("descending-link needs --in"))?;
            let tree: Forest = if Path::new(src).is_file() { read_input(Path::new(src), "forest")? } else { src.parse()? };
            let dl = descending_link(&tree)?;
            let mut v = complex_json(&dl.complex)?;
            v["tree"] = tree.to_string().into();
            v
        }
        ComplexKind::Sublevel => complex_json(&positive_sublevel_complex(n, arity)?)?,
    };
    Ok((Vec::new(), Some(result)))
}

fn load_complex(src: &ComplexSource) -> Result<SimplicialComplex> {
    match &src.input {
        Some(p) => read_input(p, "complex"),
        None => Ok(matching_complex(&verify::graph_family(graph_kind(&src.graph)?, src.n))),
    }
}

fn verify_suite(
    suite: Suite,
    family: &str,
    arity: Option<usize>,
    bound: Option<usize>,
    n: Option<usize>,
    seed: u64,
) -> Result<Vec<Record>> {
    Ok(match suite {
        Suite::NormalForm => verify::normal_form_confluence(3, n.unwrap_or(8), 6, 10_000, seed),
        Suite::Lattice => verify::lattice_laws(n.unwrap_or(6)),
        Suite::IpAxioms if family == "corrupted-V" => {
            Record::from_check("ip-axioms/corrupted-V", &check_ip_axioms(&CorruptedV, bound.unwrap_or(4)))
        }
        Suite::IpAxioms => {
            let f = family_of(family, arity)?;
            let default = if f.kind.is_braided() { 4 } else { 5 };
            verify::ip_axioms(f, bound.unwrap_or(default))
        }
        Suite::BvRelations => verify::bv_relations(n.unwrap_or(4)),
        Suite::RotationAction => verify::rotation_action(),
        Suite::PiEquivariance => verify::pi_equivariance(n.unwrap_or(4), bound.unwrap_or(3), 500, seed),
        Suite::Group => verify::group_arithmetic(bound.unwrap_or(1000), seed),
        Suite::EComplexes => verify::e_complexes(n.unwrap_or(8), bound.unwrap_or(6))?,
        Suite::Connectivity => verify::connectivity(5, n.unwrap_or(12))?,
        Suite::DescendingLinks => verify::descending_links(n.unwrap_or(7), bound.unwrap_or(6))?,
        Suite::Basilica => verify::basilica(n.unwrap_or(3))?,
        Suite::BraidKernel => verify::braid_kernel(n.unwrap_or(5)),
        Suite::Components => verify::components(arity.unwrap_or(3), n.unwrap_or(10)),
        Suite::All => verify::all(seed)?,
    })
}

fn load_graph(s: &str) -> Result<MultiGraph> {
    match s {
        "basilica" => Ok(basilica_graph()),
        "edge" => Ok(single_edge()),
        "bad1" => bad_graph(1),
        "bad2" => bad_graph(2),
        "bad3" => bad_graph(3),
        path => read_input(Path::new(path), "graph"),
    }
}

fn rewrite(op: RewriteOp, rule: &str, graph: &str, edge: Option<&str>, bound: usize) -> Result<Output> {
    let rule: Rule = rule.parse()?;
    let g = load_graph(graph)?;
    let result = match op {
        RewriteOp::Apply => {
            let eps = edge.ok_or_else(|| parse_err("apply needs --edge"))?;
            json!({ "graph": to_value(&apply_rule(&g, eps, &rule)?) })
        }
        RewriteOp::Patterns => {
            let ps = find_coexpansions(&g, &rule)?;
            json!({
                "patterns": ps.iter().map(|p| p.label()).collect::<Vec<_>>(),
                "aut_orbits": pattern_orbits(&g, &ps),
            })
        }
        RewriteOp::Contract => {
            let eg = build_e_graph(&g, &rule)?;
            let facet: Vec<_> = match eg.complex.facets().first() {
                Some(f) => f.iter().map(|&i| eg.patterns[i as usize].clone()).collect(),
                None => Vec::new(),
            };
            let (m, iso) = contract(&g, &facet, &rule)?;
            json!({
                "contracted": facet.iter().map(|p| p.label()).collect::<Vec<_>>(),
                "morphism": to_value(&m),
                "iso": to_value(&iso),
            })
        }
        RewriteOp::Eh => {
            let eg = build_e_graph(&g, &rule)?;
            let dim = eg.complex.dim().max(1) as usize;
            let groups = reduced_homology(&eg.complex, dim)?;
            json!({
                "patterns": eg.patterns.iter().map(|p| p.label()).collect::<Vec<_>>(),
                "complex": to_value(&eg.complex),
                "f_vector": eg.complex.f_vector()?,
                "groups": groups.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "betti": groups.iter().map(|h| h.betti).collect::<Vec<_>>(),
            })
        }
        RewriteOp::Check => {
            let mut records = Record::from_check("rewrite/iso-action", &check_iso_action(&g, &rule, bound)?);
            records.extend(Record::from_check("rewrite/ore-laws", &check_ore_laws(&g, &rule)?));
            return Ok((records, None));
        }
    };
    Ok((Vec::new(), Some(result)))
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let out = run(std::env::args());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_table_matches_parser() {
        let cmd = Cli::command();
        let names: Vec<&str> = cmd.get_subcommands().map(|s| s.get_name()).collect();
        assert_eq!(names, COMMANDS.iter().map(|(c, _)| *c).collect::<Vec<_>>());
        for sub in cmd.get_subcommands() {
            let ops: Vec<String> = sub
                .get_positionals()
                .next()
                .filter(|a| a.get_id() != "operands")
                .map(|a| a.get_possible_values().iter().map(|v| v.get_name().to_string()).collect())
                .unwrap_or_default();
            let table = COMMANDS.iter().find(|(c, _)| *c == sub.get_name()).unwrap().1;
            assert_eq!(ops, table.iter().map(|s| s.to_string()).collect::<Vec<_>>(), "{}", sub.get_name());
        }
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["ore", "nonsense"]).code, 2);
        assert_eq!(run(["ore", "verify", "ip-axioms", "--family", "Q"]).code, 2);
        assert_eq!(run(["ore", "forest", "compose", "F(1;1)"]).code, 2);
    }

    #[test]
    fn rotation_action_exits_zero() {
        let out = run(["ore", "verify", "rotation-action"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("\"failed\": 0"));
    }
}
