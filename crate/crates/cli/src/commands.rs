//! Command implementations. Each returns the text and the machine form of
//! its result; `main` picks one.

use std::fmt::Write as _;

use nacyc::base::BaseField;
use nacyc::classify::{self, CanonicalParam, QuaternionMode, Window};
use nacyc::extension::{enumerate_extensions, CyclicExtension};
use nacyc::literal::{parse_alg_elem, parse_base_elem, parse_ext_elem, parse_extension, parse_field};
use nacyc::nacalg::{CyclicAlgebra, NucleusKind};
use nacyc::{oracle, Error, Result};
use serde_json::{json, Value};

use crate::{AlgArgs, AlgCmd, Cli, ClassifyCmd, Command, ExtArgs, ExtCmd, Mode, OracleCmd};

pub struct Report {
    pub command: &'static str,
    pub text: String,
    pub json: Value,
}

/// Parse `vmin,vmax,digits`.
pub fn parse_window(s: &str) -> std::result::Result<Window, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [vmin, vmax, digits] = parts[..] else {
        return Err("expected `vmin,vmax,digits`".into());
    };
    let w = Window {
        vmin: vmin.parse().map_err(|_| format!("bad vmin `{vmin}`"))?,
        vmax: vmax.parse().map_err(|_| format!("bad vmax `{vmax}`"))?,
        digits: digits.parse().map_err(|_| format!("bad digit count `{digits}`"))?,
    };
    if w.digits == 0 {
        return Err("digit count must be positive".into());
    }
    Ok(w)
}

fn field(desc: &str, cli: &Cli) -> Result<BaseField> {
    parse_field(desc, cli.opts.precision)
}

fn extension(args: &ExtArgs, cli: &Cli) -> Result<CyclicExtension> {
    let base = field(&args.field, cli)?;
    parse_extension(&base, &args.ext, args.m)
}

fn algebra(args: &AlgArgs, cli: &Cli) -> Result<CyclicAlgebra> {
    let ext = extension(&args.ext, cli)?;
    let a = parse_ext_elem(&ext, &args.a)?;
    CyclicAlgebra::new(&ext, args.j, a)
}

fn mode(m: Mode) -> QuaternionMode {
    match m {
        Mode::Theorem => QuaternionMode::Theorem,
        Mode::Alternative => QuaternionMode::Alternative,
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::FieldInfo { field: f } => field_info(&field(f, cli)?),
        Command::Ext(c) => match c {
            ExtCmd::Make(args) => ext_make(&extension(args, cli)?),
            ExtCmd::List { field: f, m } => ext_list(&field(f, cli)?, *m),
            ExtCmd::Norms { ext, x, y } => ext_norms(&extension(ext, cli)?, x, y),
        },
        Command::Alg(c) => match c {
            AlgCmd::Mul { alg, x, y } => {
                let alg = algebra(alg, cli)?;
                let (x, y) = (parse_alg_elem(&alg, x)?, parse_alg_elem(&alg, y)?);
                let z = alg.mul(&x, &y)?;
                Ok(Report {
                    command: "alg mul",
                    text: format!("{z}\n"),
                    json: json!({ "x": x.to_string(), "y": y.to_string(), "product": z.to_string() }),
                })
            }
            AlgCmd::Assoc { alg, x, y, z } => {
                let alg = algebra(alg, cli)?;
                let (x, y, z) = (parse_alg_elem(&alg, x)?, parse_alg_elem(&alg, y)?, parse_alg_elem(&alg, z)?);
                let r = alg.associator(&x, &y, &z)?;
                Ok(Report {
                    command: "alg assoc",
                    text: format!("{r}\n"),
                    json: json!({ "x": x.to_string(), "y": y.to_string(), "z": z.to_string(), "associator": r.to_string() }),
                })
            }
            AlgCmd::Nuclei { alg } => nuclei(&algebra(alg, cli)?),
            AlgCmd::Division { alg } => {
                let alg = algebra(alg, cli)?;
                let d = alg.is_division();
                let verdict = match d.result {
                    Some(true) => "division algebra",
                    Some(false) => "not a division algebra",
                    None => "undecided",
                };
                let mut text = format!("{verdict} (method: {})\n", d.method);
                if !d.note.is_empty() {
                    writeln!(text, "note: {}", d.note).unwrap();
                }
                Ok(Report { command: "alg division", text, json: serde_json::to_value(&d).expect("json") })
            }
        },
        Command::Classify(c) => classify_cmd(c, cli),
        Command::Oracle(c) => match c {
            OracleCmd::Verify { theorem, q, m } => {
                let r = oracle::verify_theorem(theorem, *q, *m)?;
                let mut text = format!(
                    "{} over GF({})^{}: {} ({} checked, {} counterexamples)\n",
                    r.theorem,
                    r.q,
                    r.m,
                    if r.passed { "pass" } else { "FAIL" },
                    r.checked,
                    r.counterexamples.len()
                );
                for c in &r.counterexamples {
                    writeln!(text, "  counterexample: {c}").unwrap();
                }
                Ok(Report { command: "oracle verify", text, json: serde_json::to_value(&r).expect("json") })
            }
            OracleCmd::Classes { q, m } => {
                let r = oracle::brute_classes(*q, *m)?;
                let text = format!(
                    "GF({q}) degree {m}: {} proper parameters, {} classes by search, {} by criterion, agreement {}\n",
                    r.proper, r.classes_brute, r.classes_criterion, r.agreement
                );
                Ok(Report { command: "oracle classes", text, json: serde_json::to_value(&r).expect("json") })
            }
        },
    }
}

fn field_info(f: &BaseField) -> Result<Report> {
    let res = f.residue();
    let mut text = String::new();
    let mut info = json!({
        "descriptor": f.to_string(),
        "p": f.p(),
        "q": f.q(),
        "characteristic": f.characteristic(),
        "residue_field": res.to_string(),
    });
    writeln!(text, "field: {f}").unwrap();
    writeln!(text, "residue field: {res} (q = {})", f.q()).unwrap();
    writeln!(text, "characteristic: {}", f.characteristic()).unwrap();
    match f {
        BaseField::Finite(s) => {
            writeln!(text, "multiplicative generator: {}", s.generator()).unwrap();
            info["generator"] = json!(s.generator().to_string());
        }
        BaseField::Local(s) => {
            writeln!(text, "default precision: {} digits", s.default_precision()).unwrap();
            writeln!(text, "uniformizer: {}", s.uniformizer()).unwrap();
            info["precision"] = json!(s.default_precision());
            info["uniformizer"] = json!(s.uniformizer().to_string());
            if s.p() != 2 {
                let eps = s.epsilon()?;
                writeln!(text, "nonsquare unit: {eps}").unwrap();
                info["epsilon"] = json!(eps.to_string());
            }
        }
    }
    Ok(Report { command: "field-info", text, json: info })
}

fn reps_json(ext: &CyclicExtension) -> (String, Value) {
    match ext.norm_class_reps() {
        Ok(r) => {
            let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            (format!("{{{}}}", s.join(", ")), json!(s))
        }
        Err(e) => (format!("unavailable ({e})"), Value::Null),
    }
}

fn ext_make(ext: &CyclicExtension) -> Result<Report> {
    let (reps, reps_v) = reps_json(ext);
    let mut text = String::new();
    writeln!(text, "extension: {ext}").unwrap();
    writeln!(text, "key: {}", ext.field_key()).unwrap();
    writeln!(text, "degree: {}", ext.degree()).unwrap();
    writeln!(text, "unramified: {}", ext.is_unramified()).unwrap();
    if let Some((b, zeta)) = ext.kummer_data() {
        writeln!(text, "beta^{} = {b}, sigma(beta) = {zeta} * beta", ext.degree()).unwrap();
    }
    writeln!(text, "norm class representatives: {reps}").unwrap();
    let mut j = ext.descriptor();
    j["unramified"] = json!(ext.is_unramified());
    j["norm_class_reps"] = reps_v;
    Ok(Report { command: "ext make", text, json: j })
}

const Q2_CLASSES: [i64; 8] = [1, -1, 2, -2, 3, -3, 6, -6];

fn ext_list(base: &BaseField, m: usize) -> Result<Report> {
    let exts = enumerate_extensions(base, m)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for ext in &exts {
        let (reps, reps_v) = reps_json(ext);
        let mut row = ext.descriptor();
        row["unramified"] = json!(ext.is_unramified());
        row["norm_class_reps"] = reps_v;
        let mut line =
            format!("{}  {}", ext.field_key(), if ext.is_unramified() { "unramified" } else { "ramified" });
        if base.is_q2() && m == 2 {
            let mut norms = Vec::new();
            for c in Q2_CLASSES {
                if ext.is_norm(&base.from_i64(c))? {
                    norms.push(c);
                }
            }
            let minus_one = norms.contains(&-1);
            let ns: Vec<String> = norms.iter().map(|c| c.to_string()).collect();
            write!(line, "  norm group {{{}}}  -1 in N: {}", ns.join(", "), if minus_one { "yes" } else { "no" })
                .unwrap();
            row["norm_square_classes"] = json!(norms);
        }
        writeln!(text, "{line}  class reps {reps}").unwrap();
        rows.push(row);
    }
    Ok(Report { command: "ext list", text, json: json!({ "field": base.to_string(), "m": m, "extensions": rows }) })
}

fn ext_norms(ext: &CyclicExtension, xs: &[String], ys: &[String]) -> Result<Report> {
    let (reps, reps_v) = reps_json(ext);
    let mut text = format!("norm class representatives: {reps}\n");
    let mut members = Vec::new();
    for s in xs {
        let x = parse_base_elem(ext.base(), s)?;
        let yes = ext.is_norm(&x)?;
        writeln!(text, "{x}: {}", if yes { "norm" } else { "not a norm" }).unwrap();
        members.push(json!({ "x": x.to_string(), "is_norm": yes }));
    }
    let mut norms = Vec::new();
    for s in ys {
        let y = parse_ext_elem(ext, s)?;
        let n = ext.norm(&y)?;
        writeln!(text, "N{y} = {n}").unwrap();
        norms.push(json!({ "y": y.to_string(), "norm": n.to_string() }));
    }
    Ok(Report {
        command: "ext norms",
        text,
        json: json!({ "extension": ext.descriptor(), "norm_class_reps": reps_v, "membership": members, "norms": norms }),
    })
}

fn nuclei(alg: &CyclicAlgebra) -> Result<Report> {
    let kinds = [
        ("left", NucleusKind::Left),
        ("middle", NucleusKind::Middle),
        ("right", NucleusKind::Right),
        ("nucleus", NucleusKind::Nucleus),
        ("center", NucleusKind::Center),
    ];
    let mut text = String::new();
    let mut j = serde_json::Map::new();
    for (name, kind) in kinds {
        let basis = alg.nucleus(kind)?;
        let b: Vec<String> = basis.iter().map(|x| x.to_string()).collect();
        writeln!(text, "{name}: dimension {}", b.len()).unwrap();
        for x in &b {
            writeln!(text, "  {x}").unwrap();
        }
        j.insert(name.into(), json!({ "dimension": b.len(), "basis": b }));
    }
    let rn = alg.right_nucleus_structure();
    if rn.s < alg.degree() {
        writeln!(
            text,
            "right nucleus generated by K and t^{}: cyclic of degree {} over the fixed field of sigma^{}",
            rn.s, rn.degree_over_e, rn.s
        )
        .unwrap();
    }
    j.insert("right_structure".into(), serde_json::to_value(&rn).expect("json"));
    Ok(Report { command: "alg nuclei", text, json: Value::Object(j) })
}

fn canon_text(c: &CanonicalParam) -> String {
    let mut text = format!("{}\n", c.a);
    writeln!(text, "case {} ({})", c.case_tag, classify::case_description(&c.case_tag)).unwrap();
    writeln!(text, "pattern {}", c.pattern).unwrap();
    if let Some(p) = c.precision {
        writeln!(text, "precision {p}").unwrap();
    }
    text
}

fn classify_cmd(c: &ClassifyCmd, cli: &Cli) -> Result<Report> {
    match c {
        ClassifyCmd::Canon { alg, mode: md } => {
            let alg = algebra(alg, cli)?;
            let canon = if *md == Mode::Alternative {
                if alg.degree() != 2 {
                    return Err(Error::UnsupportedCase("the alternative parametrization is for quaternions".into()));
                }
                classify::quaternion_canonical(alg.ext(), alg.a(), mode(*md))?
            } else {
                classify::canonicalize(&alg)?
            };
            Ok(Report { command: "classify canon", text: canon_text(&canon), json: canon.to_json() })
        }
        ClassifyCmd::Equiv { alg, b } => {
            let ext = extension(&alg.ext, cli)?;
            let a = parse_ext_elem(&ext, &alg.a)?;
            let b = parse_ext_elem(&ext, b)?;
            let eq = classify::equivalent(&ext, &a, &b)?;
            Ok(Report {
                command: "classify equiv",
                text: format!("{}\n", if eq { "equivalent" } else { "not equivalent" }),
                json: json!({ "a": a.to_string(), "b": b.to_string(), "equivalent": eq }),
            })
        }
        ClassifyCmd::Iso { field: f, ext1, ext2, m, j1, j2, a1, a2 } => {
            let base = field(f, cli)?;
            let e1 = parse_extension(&base, ext1, *m)?;
            let e2 = parse_extension(&base, ext2, *m)?;
            let x1 = CyclicAlgebra::new(&e1, *j1, parse_ext_elem(&e1, a1)?)?;
            let x2 = CyclicAlgebra::new(&e2, *j2, parse_ext_elem(&e2, a2)?)?;
            let iso = classify::isomorphic(&x1, &x2)?;
            Ok(Report {
                command: "classify iso",
                text: format!("{}\n", if iso { "isomorphic" } else { "not isomorphic" }),
                json: json!({ "first": x1.to_string(), "second": x2.to_string(), "isomorphic": iso }),
            })
        }
        ClassifyCmd::Enumerate { ext, j, mode: md } => {
            let ext = extension(ext, cli)?;
            let w = cli.opts.window;
            let reps = if *md == Mode::Alternative {
                classify::quaternion_enumerate(&ext, &w, mode(*md))?
            } else {
                classify::enumerate(&ext, *j, &w)?
            };
            let mut text = format!("{} classes in window v = {}..{}, {} digits\n", reps.len(), w.vmin, w.vmax, w.digits);
            for r in &reps {
                writeln!(text, "{}  [{}: {}]", r.a, r.case_tag, r.pattern).unwrap();
            }
            let list: Vec<Value> = reps.iter().map(CanonicalParam::to_json).collect();
            Ok(Report {
                command: "classify enumerate",
                text,
                json: json!({
                    "extension": ext.descriptor(),
                    "window": { "vmin": w.vmin, "vmax": w.vmax, "digits": w.digits },
                    "count": reps.len(),
                    "representatives": list,
                }),
            })
        }
        ClassifyCmd::Degree4 { field: f } => {
            let types = classify::degree4_types(&field(f, cli)?)?;
            let mut text = format!("{} types\n", types.len());
            for t in &types {
                writeln!(text, "{} sigma^{}: K = {}, B = {}", t.label, t.generator_power, t.extension, t.b_descriptor).unwrap();
            }
            let list: Vec<Value> = types.iter().map(|t| t.to_json()).collect();
            Ok(Report { command: "classify degree4", text, json: json!({ "count": types.len(), "types": list }) })
        }
    }
}
