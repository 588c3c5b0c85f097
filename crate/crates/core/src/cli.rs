//! Command-line front end. Every subcommand prints one JSON object (or JSON
//! lines for sweeps), a CSV table, or a plain-text rendering.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::affine::{self, PerturbationPoint, WallCrossing};
use crate::error::{Error, Result};
use crate::linalg::{self, Rat};
use crate::orbit::{self, NovikovCoset, OrbitSpec};
use crate::peterson::{self, BasisKind, SeidelValue};
use crate::qchev::{self, QuantumCohomology, QHElement};
use crate::rootdata::{self, LatticeKind, RootDatum};
use crate::weyl::WeylGroup;

#[derive(Parser, Debug)]
#[command(name = "coadjoint", version, about = "Affine-wall and quantum Schubert combinatorics for coadjoint orbits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Root system, e.g. `A2`, `B3`, `A1xA2`.
    root: String,
    /// Unit lattice: `sc` (coroot lattice) or `ad` (coweight lattice).
    #[arg(long, default_value = "sc")]
    lattice: String,
    /// Parabolic subset I, 1-based simple indices.
    #[arg(long = "I", value_delimiter = ',')]
    subset: Vec<usize>,
    /// Scale c of the base point y₀ = c·ρ_I.
    #[arg(long, default_value = "1")]
    c: String,
    /// Values α_i(a) of the perturbation point on the simple roots.
    #[arg(long, allow_hyphen_values = true)]
    perturbation: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Basis {
    Bs,
    Prime,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum SweepOp {
    Deg,
    Deglt,
    Hofer,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan data, roots, metric and ρ.
    Rootinfo {
        #[command(flatten)]
        common: Common,
    },
    /// Affine walls crossed by the segment from `--from` to `--to`.
    Walls {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Number of walls crossed by (−a, q), with both closed formulas.
    Deg {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// The chamber w_q of q + a.
    Wq {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Perturbed length ℓ′(w).
    Ellprime {
        #[command(flatten)]
        common: Common,
        /// Word in 1-based simple reflections; `e` for the identity.
        #[arg(long, default_value = "e")]
        w: String,
    },
    /// deg^{L/T}(q) and whether q is a Peterson element.
    Deglt {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Peterson lift of the coset q + Q_{R_y}.
    Lift {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Minimal coset representative of y, as a word.
        #[arg(long, default_value = "e")]
        base: String,
    },
    /// Associated lift of the coset q + Q_{R_y}.
    Assoclift {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "e")]
        base: String,
    },
    /// Hofer constant C_q, its brute-force maximum and the coupling value.
    Hofer {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Leading term of the Seidel value of x_q.
    Seidel {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum, default_value_t = Basis::Bs)]
        basis: Basis,
    },
    /// Index q1 + w_{q1}(q0) of the Pontryagin product x_{q0}·x_{q1}.
    Pmul {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        q0: String,
        #[arg(long, allow_hyphen_values = true)]
        q1: String,
    },
    /// Whether q + w⁻¹(a) is dominant.
    Imagebasis {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "e")]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Product of Schubert divisors σ_{s_i} applied to σ_w in QH(G/P).
    Qmul {
        #[command(flatten)]
        common: Common,
        /// 1-based divisor indices.
        #[arg(long, value_delimiter = ',')]
        seq: Vec<usize>,
        #[arg(long, default_value = "e")]
        w: String,
    },
    /// Peterson–Woodward comparison over divisor products.
    Pwcheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        maxdeg: i64,
    },
    /// Evaluates identities over every q in [−r, r]^rank.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        op: SweepOp,
        #[arg(long, default_value_t = 2)]
        radius: i64,
    },
}

/// A structured result: scalar fields, optionally a table.
struct Output {
    fields: Map<String, Value>,
    table: Option<Table>,
    /// Emit JSON as one line per table row.
    lines: bool,
}

struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Output {
    fn new(fields: Map<String, Value>) -> Self {
        Output { fields, table: None, lines: false }
    }

    fn with_table(mut self, columns: Vec<&'static str>, rows: Vec<Vec<Value>>) -> Self {
        self.table = Some(Table { columns, rows });
        self
    }

    fn render(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => self.render_json(out),
            Format::Csv => self.render_csv(out),
            Format::Pretty => self.render_pretty(out),
        }
    }

    fn row_objects(&self) -> Vec<Map<String, Value>> {
        self.table
            .iter()
            .flat_map(|t| {
                t.rows.iter().map(|r| {
                    t.columns
                        .iter()
                        .zip(r)
                        .map(|(c, v)| (c.to_string(), v.clone()))
                        .collect()
                })
            })
            .collect()
    }

    fn render_json(&self, out: &mut dyn Write) -> std::io::Result<()> {
        if self.lines {
            for row in self.row_objects() {
                let mut obj = row;
                for (k, v) in &self.fields {
                    obj.insert(k.clone(), v.clone());
                }
                writeln!(out, "{}", Value::Object(obj))?;
            }
            return Ok(());
        }
        let mut obj = self.fields.clone();
        if self.table.is_some() {
            obj.insert(
                "rows".into(),
                Value::Array(self.row_objects().into_iter().map(Value::Object).collect()),
            );
        }
        writeln!(out, "{}", Value::Object(obj))
    }

    fn render_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        match &self.table {
            Some(t) => {
                for (k, v) in &self.fields {
                    writeln!(out, "# {k}={}", cell(v))?;
                }
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&t.columns)?;
                for r in &t.rows {
                    w.write_record(r.iter().map(cell))?;
                }
                w.flush()
            }
            None => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["field", "value"])?;
                for (k, v) in &self.fields {
                    w.write_record([k.clone(), cell(v)])?;
                }
                w.flush()
            }
        }
    }

    fn render_pretty(&self, out: &mut dyn Write) -> std::io::Result<()> {
        for (k, v) in &self.fields {
            writeln!(out, "{k}: {}", cell(v))?;
        }
        if let Some(t) = &self.table {
            let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|j| cells.iter().map(|r| r[j].len()).chain([t.columns[j].len()]).max().unwrap_or(0))
                .collect();
            let line = |items: Vec<String>| -> String {
                items
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(t.columns.iter().map(|s| s.to_string()).collect()))?;
            for r in cells {
                writeln!(out, "{}", line(r))?;
            }
        }
        Ok(())
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn rat_json(x: &Rat) -> Value {
    Value::String(linalg::fmt_rat(x))
}

pub fn vec_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

fn word_json(weyl: &WeylGroup, w: usize) -> Value {
    json!(weyl.get(w).word_1based())
}

/// `{"root": [pairings], "level", "time", "group"}`.
pub fn crossing_json(rd: &RootDatum, c: &WallCrossing) -> Value {
    json!({
        "root": rd.positive_roots[c.root].functional,
        "level": c.level,
        "time": linalg::fmt_rat(&c.time),
        "group": c.group,
    })
}

/// Inverse of [`crossing_json`].
pub fn crossing_from_json(rd: &RootDatum, v: &Value) -> Option<WallCrossing> {
    let f: Vec<i64> = v["root"].as_array()?.iter().map(Value::as_i64).collect::<Option<_>>()?;
    let r = rd.root_by_functional(&f).filter(|r| r.positive)?;
    Some(WallCrossing {
        root: r.index,
        level: v["level"].as_i64()?,
        time: linalg::parse_rat(v["time"].as_str()?)?,
        group: v["group"].as_u64()? as usize,
    })
}

/// `{"base": word, "rep": [..], "canonical": [..]}`.
pub fn coset_json(orbit: &OrbitSpec, n: &NovikovCoset) -> Value {
    json!({
        "base": orbit.weyl.get(n.base).word_1based(),
        "rep": vec_json(&n.rep),
        "canonical": vec_json(&n.canonical),
    })
}

/// Inverse of [`coset_json`].
pub fn coset_from_json(orbit: &OrbitSpec, v: &Value) -> Result<NovikovCoset> {
    let bad = || Error::Spec("malformed Novikov coset".into());
    let word: Vec<usize> = v["base"]
        .as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|x| x.as_u64().map(|i| i as usize - 1))
        .collect::<Option<_>>()
        .ok_or_else(bad)?;
    let rep: Vec<Rat> = v["rep"]
        .as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|x| x.as_str().and_then(linalg::parse_rat))
        .collect::<Option<_>>()
        .ok_or_else(bad)?;
    let base = orbit.weyl.from_word(&word);
    NovikovCoset::new(orbit, base, rep)
}

fn parse_vector(s: &str, rank: usize) -> Result<Vec<Rat>> {
    let v: Vec<Rat> = s
        .split(',')
        .map(|t| linalg::parse_rat(t).ok_or_else(|| Error::Spec(format!("bad rational {t:?}"))))
        .collect::<Result<_>>()?;
    if v.len() != rank {
        return Err(Error::Spec(format!(
            "vector {s:?} has {} entries, expected rank {rank}",
            v.len()
        )));
    }
    Ok(v)
}

/// A lattice vector argument; must lie in the unit lattice.
fn parse_lattice_vector(rd: &RootDatum, s: &str) -> Result<Vec<Rat>> {
    let v = parse_vector(s, rd.rank)?;
    Ok(rootdata::LatticeVector::in_unit_lattice(rd, v)?.coords)
}

fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" || s == "id" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(i) if i >= 1 && i <= rank => Ok(i - 1),
            _ => Err(Error::Spec(format!("bad simple index {t:?} in word"))),
        })
        .collect()
}

struct Context {
    rd: RootDatum,
    weyl: WeylGroup,
    subset: Vec<usize>,
    scale: Rat,
    a: PerturbationPoint,
    common: Common,
}

impl Context {
    fn new(common: &Common) -> Result<Self> {
        let kind: LatticeKind = common.lattice.parse()?;
        let rd = RootDatum::new(&common.root, kind)?;
        let weyl = WeylGroup::new(&rd)?;
        let subset: Vec<usize> = common
            .subset
            .iter()
            .map(|&i| {
                if i == 0 || i > rd.rank {
                    Err(Error::Spec(format!("simple index {i} out of range 1..={}", rd.rank)))
                } else {
                    Ok(i - 1)
                }
            })
            .collect::<Result<_>>()?;
        let scale = linalg::parse_rat(&common.c).ok_or_else(|| Error::Spec(format!("bad scale {:?}", common.c)))?;
        let a = match &common.perturbation {
            Some(s) => PerturbationPoint::from_simple_values(&rd, parse_vector(s, rd.rank)?)?,
            None => PerturbationPoint::canonical(&rd),
        };
        Ok(Context { rd, weyl, subset, scale, a, common: common.clone() })
    }

    fn orbit(&self) -> Result<OrbitSpec> {
        orbit::orbit_data_with(&self.rd, self.weyl.clone(), &self.subset, self.scale)
    }

    fn word(&self, s: &str) -> Result<usize> {
        Ok(self.weyl.from_word(&parse_word(s, self.rd.rank)?))
    }

    /// Header fields shared by every response.
    fn header(&self, command: &str, a: &PerturbationPoint) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("command".into(), json!(command));
        m.insert("root".into(), json!(self.rd.name()));
        m.insert("lattice".into(), json!(self.common.lattice));
        m.insert("I".into(), json!(self.subset.iter().map(|i| i + 1).collect::<Vec<_>>()));
        m.insert("a".into(), vec_json(&a.simple_values));
        m
    }
}

fn insert(m: &mut Map<String, Value>, k: &str, v: Value) {
    m.insert(k.to_string(), v);
}

fn certified(ctx: &Context, queries: &[Vec<Rat>]) -> Result<PerturbationPoint> {
    PerturbationPoint::certify(&ctx.rd, &ctx.a, queries)
}

fn seidel_json(orbit: &OrbitSpec, v: &SeidelValue) -> Value {
    match v {
        SeidelValue::Term(t) => json!({
            "kind": "term",
            "coset": orbit.weyl.get(t.coset).word_1based(),
            "nov": coset_json(orbit, &t.nov),
            "coeff_magnitude": t.coeff_magnitude,
            "sign_known": t.sign_known,
            "full": t.full,
            "ell_prime_bound": t.ell_prime_bound.as_ref().map(rat_json),
        }),
        SeidelValue::Zero => json!({ "kind": "zero" }),
        SeidelValue::Undetermined { deg_lt } => json!({ "kind": "undetermined", "deg_lt": deg_lt }),
    }
}

fn qh_rows(weyl: &WeylGroup, x: &QHElement) -> Vec<Vec<Value>> {
    x.terms
        .iter()
        .map(|((w, d), c)| vec![word_json(weyl, *w), json!(d), json!(c)])
        .collect()
}

fn execute(command: Command) -> Result<(Output, Format)> {
    let assoc = matches!(command, Command::Assoclift { .. });
    match command {
        Command::Rootinfo { common } => {
            let ctx = Context::new(&common)?;
            let rd = &ctx.rd;
            let mut m = ctx.header("rootinfo", &ctx.a);
            insert(&mut m, "rank", json!(rd.rank));
            insert(&mut m, "cartan", json!(rd.cartan));
            insert(&mut m, "gram", Value::Array(rd.gram.iter().map(|r| vec_json(r)).collect()));
            insert(&mut m, "normalization", rat_json(&rd.normalization));
            insert(&mut m, "rho", vec_json(&rd.rho()));
            insert(
                &mut m,
                "highest",
                json!(rd.highest.iter().map(|&h| rd.positive_roots[h].coeffs.clone()).collect::<Vec<_>>()),
            );
            insert(&mut m, "weyl_order", json!(ctx.weyl.order()));
            insert(&mut m, "metric_normalized", json!(rd.metric_is_normalized()));
            let identity: Vec<Vec<Rat>> = linalg::identity_int(rd.rank).iter().map(|r| linalg::to_rat(r)).collect();
            let (_, torsion) = rootdata::quotient_structure(&rd.unit_lattice_basis, &identity)?;
            insert(&mut m, "pi1", json!(torsion));
            let rows = rd
                .positive_roots
                .iter()
                .map(|r| vec![json!(r.coeffs), json!(r.functional), json!(r.coroot), rat_json(&r.norm2)])
                .collect();
            Ok((Output::new(m).with_table(vec!["coeffs", "functional", "coroot", "norm2"], rows), common.format))
        }
        Command::Walls { common, from, to } => {
            let ctx = Context::new(&common)?;
            let rd = &ctx.rd;
            let y = if to.trim() == "-a" || to.trim() == "a" {
                return Err(Error::Spec("--to must be a vector".into()));
            } else {
                parse_vector(&to, rd.rank)?
            };
            let (a, walls, x, report) = match from.trim() {
                "-a" => {
                    let (a, walls) = affine::bs_wall_sequence(rd, &y, &ctx.a)?;
                    let x = a.neg();
                    let report = affine::is_nice(rd, &x, &y);
                    (a, walls, x, report)
                }
                "a" => {
                    let x = ctx.a.coords.clone();
                    (ctx.a.clone(), affine::crossing_times(rd, &x, &y), x.clone(), affine::is_nice(rd, &x, &y))
                }
                s => {
                    let x = parse_vector(s, rd.rank)?;
                    if x == y {
                        return Err(Error::Domain("segment endpoints coincide".into()));
                    }
                    (ctx.a.clone(), affine::crossing_times(rd, &x, &y), x.clone(), affine::is_nice(rd, &x, &y))
                }
            };
            let mut m = ctx.header("walls", &a);
            insert(&mut m, "from", vec_json(&x));
            insert(&mut m, "to", vec_json(&y));
            insert(&mut m, "nice", json!(report.nice));
            if let Some((t, ws)) = &report.violation {
                let ws: Vec<Value> = ws
                    .iter()
                    .map(|(r, k)| json!({ "root": rd.positive_roots[*r].functional, "level": k }))
                    .collect();
                insert(&mut m, "violation", json!({ "time": linalg::fmt_rat(t), "walls": ws }));
            }
            insert(&mut m, "crossings", Value::Array(walls.iter().map(|c| crossing_json(rd, c)).collect()));
            let rows = walls
                .iter()
                .map(|c| {
                    let j = crossing_json(rd, c);
                    vec![j["root"].clone(), j["level"].clone(), j["time"].clone(), j["group"].clone()]
                })
                .collect();
            let mut out = Output::new(m);
            if common.format != Format::Json {
                out = out.with_table(vec!["root", "level", "time", "group"], rows);
            }
            Ok((out, common.format))
        }
        Command::Deg { common, q } => {
            let ctx = Context::new(&common)?;
            let rd = &ctx.rd;
            let q = parse_lattice_vector(rd, &q)?;
            let a = certified(&ctx, std::slice::from_ref(&q))?;
            let d = affine::deg(rd, &q, &a)?;
            let w = peterson::w_q_in(rd, &ctx.weyl, &q, &a)?;
            let mut m = ctx.header("deg", &a);
            insert(&mut m, "q", vec_json(&q));
            insert(&mut m, "deg", json!(d));
            insert(&mut m, "floor_formula", json!(peterson::deg_floor_formula(rd, &ctx.weyl, &q, &a)?));
            insert(&mut m, "closed_form", json!(peterson::deg_closed_form(rd, &ctx.weyl, &q, &a)?));
            insert(&mut m, "w_q", word_json(&ctx.weyl, w));
            Ok((Output::new(m), common.format))
        }
        Command::Wq { common, q } => {
            let ctx = Context::new(&common)?;
            let q = parse_lattice_vector(&ctx.rd, &q)?;
            let w = peterson::w_q_in(&ctx.rd, &ctx.weyl, &q, &ctx.a)?;
            let mut m = ctx.header("wq", &ctx.a);
            insert(&mut m, "q", vec_json(&q));
            insert(&mut m, "w_q", word_json(&ctx.weyl, w));
            insert(&mut m, "length", json!(ctx.weyl.length(w)));
            Ok((Output::new(m), common.format))
        }
        Command::Ellprime { common, w } => {
            let ctx = Context::new(&common)?;
            let w = ctx.word(&w)?;
            let mut m = ctx.header("ellprime", &ctx.a);
            insert(&mut m, "w", word_json(&ctx.weyl, w));
            insert(&mut m, "length", json!(ctx.weyl.length(w)));
            insert(&mut m, "ell_prime", rat_json(&peterson::ell_prime(&ctx.rd, &ctx.weyl, w, &ctx.a)));
            insert(&mut m, "closed_form", rat_json(&peterson::ell_prime_closed(&ctx.rd, &ctx.weyl, w, &ctx.a)));
            Ok((Output::new(m), common.format))
        }
        Command::Deglt { common, q } => {
            let ctx = Context::new(&common)?;
            let o = ctx.orbit()?;
            let q = parse_lattice_vector(&ctx.rd, &q)?;
            let w = peterson::w_q(&o, &q, &ctx.a)?;
            let d = peterson::deg_lt(&o, &q, &ctx.a)?;
            let mut m = ctx.header("deglt", &ctx.a);
            insert(&mut m, "q", vec_json(&q));
            insert(&mut m, "w_q", word_json(&ctx.weyl, w));
            insert(&mut m, "deg_lt", json!(d));
            insert(&mut m, "fiber_walls", json!(peterson::fiber_degree_by_walls(&o, w, &q, &ctx.a)));
            insert(&mut m, "peterson", json!(d == 0));
            Ok((Output::new(m), common.format))
        }
        Command::Lift { common, q, base } | Command::Assoclift { common, q, base } => {
            let name = if assoc { "assoclift" } else { "lift" };
            let ctx = Context::new(&common)?;
            let o = ctx.orbit()?;
            let q = parse_lattice_vector(&ctx.rd, &q)?;
            let base = ctx.word(&base)?;
            let nov = NovikovCoset::new(&o, base, q)?;
            let lift = peterson::peterson_lift(&o, &nov)?;
            let x = peterson::associated_lift_of(&o, base, &lift.q_tilde, &ctx.a)?;
            let mut m = ctx.header(name, &ctx.a);
            insert(&mut m, "coset", coset_json(&o, &nov));
            insert(&mut m, "q_tilde", vec_json(&lift.q_tilde));
            insert(&mut m, "fiber_degree", json!(peterson::fiber_degree(&o, base, &lift.q_tilde)));
            insert(&mut m, "search_radius", json!(lift.radius));
            insert(&mut m, "x", word_json(&ctx.weyl, x));
            insert(&mut m, "x_point", vec_json(&o.regular_point(x)));
            Ok((Output::new(m), common.format))
        }
        Command::Hofer { common, q } => {
            let ctx = Context::new(&common)?;
            let o = ctx.orbit()?;
            let q = parse_lattice_vector(&ctx.rd, &q)?;
            let w = peterson::w_q(&o, &q, &ctx.a)?;
            let (max, argmax) = peterson::hofer_brute_force(&o, &q);
            let mut m = ctx.header("hofer", &ctx.a);
            insert(&mut m, "q", vec_json(&q));
            insert(&mut m, "w_q", word_json(&ctx.weyl, w));
            insert(&mut m, "hofer", rat_json(&peterson::hofer_constant(&o, &q, &ctx.a)?));
            insert(&mut m, "brute_max", rat_json(&max));
            insert(&mut m, "attained_at_w_q", json!(argmax.contains(&w)));
            insert(&mut m, "coupling", rat_json(&orbit::coupling_value(&o, &q, &ctx.a)?));
            Ok((Output::new(m), common.format))
        }
        Command::Seidel { common, q, basis } => {
            let ctx = Context::new(&common)?;
            let o = ctx.orbit()?;
            let q = parse_lattice_vector(&ctx.rd, &q)?;
            let kind = match basis {
                Basis::Bs => BasisKind::BottSamelson,
                Basis::Prime => BasisKind::Prime,
            };
            let v = peterson::seidel_basis_value(&o, &q, &ctx.a, kind)?;
            let mut m = ctx.header("seidel", &ctx.a);
            insert(&mut m, "q", vec_json(&q));
            insert(&mut m, "basis", json!(if kind == BasisKind::Prime { "prime" } else { "bs" }));
            insert(&mut m, "value", seidel_json(&o, &v));
            Ok((Output::new(m), common.format))
        }
        Command::Pmul { common, q0, q1 } => {
            let ctx = Context::new(&common)?;
            let q0 = parse_lattice_vector(&ctx.rd, &q0)?;
            let q1 = parse_lattice_vector(&ctx.rd, &q1)?;
            let idx = peterson::pontryagin_index(&ctx.rd, &ctx.weyl, &q0, &q1, &ctx.a)?;
            let w = peterson::w_q_in(&ctx.rd, &ctx.weyl, &q1, &ctx.a)?;
            let mut m = ctx.header("pmul", &ctx.a);
            insert(&mut m, "q0", vec_json(&q0));
            insert(&mut m, "q1", vec_json(&q1));
            insert(&mut m, "w_q1", word_json(&ctx.weyl, w));
            insert(&mut m, "index", vec_json(&idx));
            Ok((Output::new(m), common.format))
        }
        Command::Imagebasis { common, w, q } => {
            let ctx = Context::new(&common)?;
            let w = ctx.word(&w)?;
            let q = parse_lattice_vector(&ctx.rd, &q)?;
            let mut m = ctx.header("imagebasis", &ctx.a);
            insert(&mut m, "w", word_json(&ctx.weyl, w));
            insert(&mut m, "q", vec_json(&q));
            insert(&mut m, "member", json!(peterson::image_basis_member(&ctx.rd, &ctx.weyl, w, &q, &ctx.a)));
            Ok((Output::new(m), common.format))
        }
        Command::Qmul { common, seq, w } => {
            let ctx = Context::new(&common)?;
            let o = ctx.orbit()?;
            let qh = QuantumCohomology::new(&o);
            let w = ctx.word(&w)?;
            let seq: Vec<usize> = seq
                .iter()
                .map(|&i| {
                    if i == 0 || i > ctx.rd.rank {
                        Err(Error::Spec(format!("divisor index {i} out of range")))
                    } else {
                        Ok(i - 1)
                    }
                })
                .collect::<Result<_>>()?;
            let mut x = QHElement::schubert(w, ctx.rd.rank);
            if !ctx.weyl.is_minimal_rep(&ctx.rd, w, &o.subset) {
                return Err(Error::Domain("--w is not a minimal coset representative".into()));
            }
            for &i in seq.iter().rev() {
                x = qh.mul_divisor(i, &x)?;
            }
            let mut m = ctx.header("qmul", &ctx.a);
            insert(&mut m, "seq", json!(seq.iter().map(|i| i + 1).collect::<Vec<_>>()));
            insert(&mut m, "w", word_json(&ctx.weyl, w));
            let rows = qh_rows(&ctx.weyl, &x);
            Ok((Output::new(m).with_table(vec!["class", "degree", "coeff"], rows), common.format))
        }
        Command::Pwcheck { common, k, maxdeg } => {
            let ctx = Context::new(&common)?;
            let o = ctx.orbit()?;
            let lines = qchev::verify_pw(&o, k, maxdeg, &ctx.a)?;
            let mut m = Map::new();
            insert(
                &mut m,
                "orbit",
                json!(format!("{}/I={:?}", ctx.rd.name(), ctx.subset.iter().map(|i| i + 1).collect::<Vec<_>>())),
            );
            insert(&mut m, "a", vec_json(&ctx.a.simple_values));
            let rows = lines
                .iter()
                .map(|l| {
                    vec![
                        json!(l.instance.inputs.iter().map(|i| i + 1).collect::<Vec<_>>()),
                        word_json(&ctx.weyl, l.instance.target),
                        json!(l.instance.degree),
                        json!(l.lhs),
                        json!(l.rhs),
                        json!(l.equal()),
                        word_json(&ctx.weyl, l.transfer.x),
                        json!(l.transfer.degree_b),
                    ]
                })
                .collect();
            let mut out = Output::new(m).with_table(
                vec!["inputs", "target", "degree", "lhs", "rhs", "equal", "lift", "lift_degree"],
                rows,
            );
            out.lines = true;
            Ok((out, common.format))
        }
        Command::Sweep { common, op, radius } => {
            let ctx = Context::new(&common)?;
            let o = ctx.orbit()?;
            let rd = &ctx.rd;
            let mut rows = Vec::new();
            let columns: Vec<&'static str>;
            match op {
                SweepOp::Deg => {
                    columns = vec!["q", "w_q", "deg", "floor_formula", "closed_form", "equal"];
                    for c in linalg::box_points(rd.rank, radius) {
                        let q = rd.from_unit_coords(&c);
                        let a = certified(&ctx, std::slice::from_ref(&q))?;
                        let d = affine::deg(rd, &q, &a)? as i64;
                        let f = peterson::deg_floor_formula(rd, &ctx.weyl, &q, &a)?;
                        let cf = peterson::deg_closed_form(rd, &ctx.weyl, &q, &a)?;
                        let w = peterson::w_q_in(rd, &ctx.weyl, &q, &a)?;
                        rows.push(vec![vec_json(&q), word_json(&ctx.weyl, w), json!(d), json!(f), json!(cf), json!(d == f && f == cf)]);
                    }
                }
                SweepOp::Deglt => {
                    columns = vec!["q", "w_q", "deg", "unstable_dim", "c1v", "deg_lt", "identity"];
                    for c in linalg::box_points(rd.rank, radius) {
                        let q = rd.from_unit_coords(&c);
                        let a = certified(&ctx, std::slice::from_ref(&q))?;
                        let d = affine::deg(rd, &q, &a)? as i64;
                        let w = peterson::w_q(&o, &q, &a)?;
                        let base = o.coset_rep(w);
                        let u = orbit::unstable_dim(&o, base, &a) as i64;
                        let c1 = orbit::c1v(&o, &NovikovCoset::new(&o, base, q.clone())?)?;
                        let lt = peterson::deg_lt(&o, &q, &a)? as i64;
                        rows.push(vec![
                            vec_json(&q),
                            word_json(&ctx.weyl, w),
                            json!(d),
                            json!(u),
                            json!(c1),
                            json!(lt),
                            json!(2 * d + u + 2 * c1 == 2 * lt),
                        ]);
                    }
                }
                SweepOp::Hofer => {
                    columns = vec!["q", "w_q", "hofer", "brute_max", "coupling", "equal"];
                    for c in linalg::box_points(rd.rank, radius) {
                        let q = rd.from_unit_coords(&c);
                        let w = peterson::w_q(&o, &q, &ctx.a)?;
                        let h = peterson::hofer_constant(&o, &q, &ctx.a)?;
                        let (max, argmax) = peterson::hofer_brute_force(&o, &q);
                        let cv = orbit::coupling_value(&o, &q, &ctx.a)?;
                        rows.push(vec![
                            vec_json(&q),
                            word_json(&ctx.weyl, w),
                            rat_json(&h),
                            rat_json(&max),
                            rat_json(&cv),
                            json!(h == max && argmax.contains(&w) && cv == -h),
                        ]);
                    }
                }
            }
            let mut m = ctx.header("sweep", &ctx.a);
            insert(&mut m, "op", json!(format!("{op:?}").to_lowercase()));
            let mut out = Output::new(m).with_table(columns, rows);
            out.lines = true;
            Ok((out, common.format))
        }
    }
}

/// Runs the tool on `argv` (including the program name), writing to `out`
/// and `err`. Returns the process exit code.
pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((output, format)) => match output.render(format, out) {
            Ok(()) => 0,
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_domain() {
                2
            } else {
                1
            }
        }
    }
}

/// Runs the tool with the process's standard streams.
pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
