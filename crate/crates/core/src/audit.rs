//! Checks of posits and regulations over a trace, and searches for the
//! signature phenomena: failure of modus ponens for theses, ex falso as a
//! maxim, and disconnected theses.
//!
//! Every check ranges over the declared sentences S of a fragment, their
//! negjunctions, the open bodies of the fragment's abstractions and the
//! fragment universe. Instances that need lookback atoms beyond those of the
//! plain fragment are compiled in advance by [`prepare`].

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{run, Fragment, FragmentSpec, StageTrace, Status, Valency};
use crate::error::Result;
use crate::goedel::goedel_code;
use crate::syntax::{substitutable, substitute, Expr, Kind, Sugar};

/// Open bodies taken per fragment for the quantifier posits.
const OPEN_LIMIT: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub sentence: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub requirement: String,
    pub instances: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
    pub skips: Vec<String>,
}

impl CheckReport {
    fn new(name: &str, requirement: &str) -> CheckReport {
        CheckReport {
            name: name.into(),
            requirement: requirement.into(),
            instances: 0,
            passes: 0,
            failures: Vec::new(),
            skips: Vec::new(),
        }
    }

    fn skipped(name: &str, requirement: &str, reason: &str) -> CheckReport {
        let mut r = CheckReport::new(name, requirement);
        r.skips.push(reason.into());
        r
    }

    fn record(
        &mut self,
        ok: bool,
        sentence: impl FnOnce() -> String,
        found: impl FnOnce() -> String,
    ) {
        self.instances += 1;
        if ok {
            self.passes += 1;
        } else {
            self.failures.push(Failure {
                sentence: sentence(),
                found: found(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub banner: String,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mp_witness: Option<MpWitness>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn merge(mut self, other: AuditReport) -> AuditReport {
        self.checks.extend(other.checks);
        self.mp_witness = self.mp_witness.or(other.mp_witness);
        self
    }

    pub fn to_text(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = format!("{}\n", self.banner);
        let _ = writeln!(
            out,
            "{:<width$}  {:<8}  {:>9}  {:>7}  {:>8}  skip",
            "check", "needs", "instances", "passes", "failures"
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<width$}  {:<8}  {:>9}  {:>7}  {:>8}  {}",
                c.name,
                c.requirement,
                c.instances,
                c.passes,
                c.failures.len(),
                c.skips.join("; ")
            );
            for f in &c.failures {
                let _ = writeln!(out, "  failure: {} [{}]", f.sentence, f.found);
            }
        }
        if let Some(w) = &self.mp_witness {
            let _ = writeln!(
                out,
                "modus ponens fails: thesis {}; thesis {}; non-thesis {}",
                w.antecedent, w.conditional, w.consequent
            );
        }
        out
    }
}

/// The sentences and open formulas the checks range over.
struct Ground {
    base: Vec<Expr>,
    sentences: Vec<Expr>,
    /// Open bodies A(x) with the shared noema x free.
    open: Vec<Expr>,
    x: u64,
    universe: Vec<Expr>,
    abstractions: Vec<Expr>,
    registry: Vec<(Expr, Expr)>,
    euro: bool,
    aliases: usize,
}

fn top_index(e: &Expr) -> u64 {
    e.symbols()
        .iter()
        .filter(|s| s.0 >= 5)
        .map(|s| s.0 - 5)
        .max()
        .map_or(0, |k| k + 1)
}

impl Ground {
    fn of(f: &Fragment) -> Ground {
        let base = f.declared().to_vec();
        let mut sentences = Vec::new();
        for a in &base {
            for s in [a.clone(), Sugar::not(a.clone())] {
                if !sentences.contains(&s) {
                    sentences.push(s);
                }
            }
        }
        let universe = f.universe().to_vec();
        let abstractions: Vec<Expr> = universe
            .iter()
            .filter(|t| matches!(t.kind(), Kind::Abstraction(..)))
            .cloned()
            .collect();
        let x = abstractions.iter().map(top_index).max().unwrap_or(0);
        let open = abstractions
            .iter()
            .filter_map(|c| match c.kind() {
                Kind::Abstraction(y, body) if body.has_noema(*y) => {
                    Some(substitute(&Expr::noema(x), *y, body))
                }
                _ => None,
            })
            .take(OPEN_LIMIT)
            .collect();
        Ground {
            base,
            sentences,
            open,
            x,
            universe,
            abstractions,
            registry: f.registry().to_vec(),
            euro: f.euro_enabled(),
            aliases: f.aliases().len(),
        }
    }

    fn pairs(&self) -> Vec<(Expr, Expr)> {
        let s = &self.sentences;
        s.iter()
            .flat_map(|a| s.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }
}

enum Need {
    Maxim,
    Thesis,
}

struct Group {
    name: &'static str,
    need: Need,
    instances: Vec<Expr>,
    skip: Option<&'static str>,
}

fn group(name: &'static str, need: Need, instances: Vec<Expr>) -> Group {
    Group {
        name,
        need,
        instances,
        skip: None,
    }
}

fn skip(name: &'static str, reason: &'static str) -> Group {
    Group {
        name,
        need: Need::Maxim,
        instances: Vec::new(),
        skip: Some(reason),
    }
}

fn posit_groups(g: &Ground) -> Vec<Group> {
    use Sugar as S;
    let t = S::truth;
    let x = g.x;
    let pairs = g.pairs();
    let ss = &g.sentences;
    let open = &g.open;
    let open_pairs: Vec<(Expr, Expr)> = open
        .iter()
        .flat_map(|a| open.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let mut out = vec![
        group(
            "£i",
            Need::Maxim,
            pairs
                .iter()
                .map(|(a, b)| S::implies(a.clone(), S::implies(b.clone(), a.clone())))
                .collect(),
        ),
        group("£ii", Need::Maxim, {
            let mut v = Vec::new();
            for a in &g.base {
                for b in &g.base {
                    for c in &g.base {
                        let (a, b, c) = (a.clone(), b.clone(), c.clone());
                        v.push(S::implies(
                            S::implies(a.clone(), S::implies(b.clone(), c.clone())),
                            S::implies(S::implies(a.clone(), b), S::implies(a, c)),
                        ));
                    }
                }
            }
            v
        }),
        group(
            "£iii",
            Need::Maxim,
            pairs
                .iter()
                .map(|(a, b)| {
                    S::implies(
                        S::implies(S::not(b.clone()), S::not(a.clone())),
                        S::implies(a.clone(), b.clone()),
                    )
                })
                .collect(),
        ),
        group(
            "£iv",
            Need::Maxim,
            ss.iter()
                .map(|a| S::implies(a.clone(), Expr::universal(S::fresh(&[a]), a.clone())))
                .collect(),
        ),
        group(
            "£v",
            Need::Maxim,
            open_pairs
                .iter()
                .map(|(a, b)| {
                    S::implies(
                        Expr::universal(x, S::implies(a.clone(), b.clone())),
                        S::implies(Expr::universal(x, a.clone()), Expr::universal(x, b.clone())),
                    )
                })
                .collect(),
        ),
        group("£vi", Need::Maxim, {
            let mut v = Vec::new();
            for a in open {
                for c in &g.universe {
                    if substitutable(c, x, a) {
                        v.push(S::implies(
                            Expr::universal(x, a.clone()),
                            substitute(c, x, a),
                        ));
                    }
                }
            }
            v
        }),
        group(
            "£1",
            Need::Maxim,
            pairs
                .iter()
                .map(|(a, b)| {
                    S::implies(
                        t(S::implies(a.clone(), b.clone())),
                        S::implies(t(a.clone()), t(b.clone())),
                    )
                })
                .collect(),
        ),
        group(
            "£2",
            Need::Maxim,
            ss.iter()
                .map(|a| S::implies(t(a.clone()), S::not(t(S::not(a.clone())))))
                .collect(),
        ),
        group(
            "£3",
            Need::Maxim,
            pairs
                .iter()
                .map(|(a, b)| {
                    S::or(
                        S::or(t(b.clone()), t(S::not(b.clone()))),
                        S::implies(t(S::not(t(S::not(a.clone())))), t(a.clone())),
                    )
                })
                .collect(),
        ),
        group(
            "£4",
            Need::Maxim,
            pairs
                .iter()
                .map(|(a, b)| {
                    S::or(
                        S::or(t(b.clone()), t(S::not(b.clone()))),
                        S::implies(t(a.clone()), t(t(a.clone()))),
                    )
                })
                .collect(),
        ),
        group(
            "£5",
            Need::Maxim,
            ss.iter()
                .map(|a| {
                    S::implies(
                        t(S::implies(t(a.clone()), a.clone())),
                        S::or(t(a.clone()), t(S::not(a.clone()))),
                    )
                })
                .collect(),
        ),
        group(
            "£6",
            Need::Maxim,
            open.iter()
                .map(|a| S::implies(S::exists(x, t(a.clone())), t(S::exists(x, a.clone()))))
                .collect(),
        ),
        group(
            "£7",
            Need::Maxim,
            open.iter()
                .map(|a| {
                    S::implies(
                        t(Expr::universal(x, a.clone())),
                        Expr::universal(x, t(a.clone())),
                    )
                })
                .collect(),
        ),
        group(
            "£8",
            Need::Thesis,
            ss.iter()
                .map(|a| S::implies(t(a.clone()), a.clone()))
                .collect(),
        ),
        group(
            "£9",
            Need::Thesis,
            ss.iter()
                .map(|a| S::implies(a.clone(), t(a.clone())))
                .collect(),
        ),
        group(
            "£10",
            Need::Thesis,
            open.iter()
                .map(|a| {
                    S::implies(
                        Expr::universal(x, t(a.clone())),
                        t(Expr::universal(x, a.clone())),
                    )
                })
                .collect(),
        ),
        group(
            "£11",
            Need::Thesis,
            open.iter()
                .map(|a| S::implies(t(S::exists(x, a.clone())), S::exists(x, t(a.clone()))))
                .collect(),
        ),
        group(
            "alethic comprehension",
            Need::Maxim,
            g.abstractions
                .iter()
                .map(|c| {
                    let Kind::Abstraction(y, body) = c.kind() else {
                        unreachable!()
                    };
                    let v = top_index(c);
                    let vv = Expr::noema(v);
                    Expr::universal(
                        v,
                        S::iff(
                            S::member(vv.clone(), c.clone()),
                            t(substitute(&vv, *y, body)),
                        ),
                    )
                })
                .collect(),
        ),
        group(
            "truth",
            Need::Maxim,
            g.registry
                .iter()
                .map(|(code, a)| S::iff(t(a.clone()), S::member(code.clone(), Expr::alethizor())))
                .collect(),
        ),
    ];
    let (v0, v1, v2) = (Expr::noema(0), Expr::noema(1), Expr::noema(2));
    let all3 = |body: Expr| Expr::universal(0, Expr::universal(1, Expr::universal(2, body)));
    let all2 = |body: Expr| Expr::universal(0, Expr::universal(1, body));
    let m = |a: &Expr, b: Expr| S::member(a.clone(), b);
    out.push(group(
        "disunion",
        Need::Maxim,
        vec![all3(S::iff(
            m(&v0, Expr::joint_term(v1.clone(), v2.clone())),
            S::and(S::not(m(&v0, v1.clone())), S::not(m(&v0, v2.clone()))),
        ))],
    ));
    out.push(group(
        "complement",
        Need::Maxim,
        vec![all2(S::iff(
            m(&v0, S::comp(v1.clone())),
            S::not(m(&v0, v1.clone())),
        ))],
    ));
    out.push(group(
        "relative complement",
        Need::Maxim,
        vec![all3(S::iff(
            m(&v0, S::minus(v1.clone(), v2.clone())),
            S::and(m(&v0, v1.clone()), S::not(m(&v0, v2.clone()))),
        ))],
    ));
    out.push(group(
        "union",
        Need::Maxim,
        vec![all3(S::iff(
            m(&v0, S::union(v1.clone(), v2.clone())),
            S::or(m(&v0, v1.clone()), m(&v0, v2.clone())),
        ))],
    ));
    out.push(group(
        "intersection",
        Need::Maxim,
        vec![all3(S::iff(
            m(&v0, S::inter(v1.clone(), v2.clone())),
            S::and(m(&v0, v1.clone()), m(&v0, v2.clone())),
        ))],
    ));
    out.push(skip("bivalence", "needs the global formula predicate"));
    out.push(skip("enumeration 1", "needs the natural-number predicate"));
    if g.euro {
        let e = Expr::enumerator();
        out.push(group(
            "enumeration 2",
            Need::Maxim,
            vec![Expr::universal(
                0,
                S::implies(
                    m(&v0, e.clone()),
                    S::exists(
                        1,
                        S::exists(2, S::identity(v0.clone(), S::pair(v1.clone(), v2.clone()))),
                    ),
                ),
            )],
        ));
        out.push(group(
            "enumeration 3",
            Need::Maxim,
            vec![all3(S::implies(
                S::and(
                    m(&S::pair(v0.clone(), v1.clone()), e.clone()),
                    m(&S::pair(v0.clone(), v2.clone()), e.clone()),
                ),
                S::identity(v1.clone(), v2.clone()),
            ))],
        ));
        out.push(group(
            "enumeration 4",
            Need::Maxim,
            vec![all3(S::implies(
                S::and(
                    m(&S::pair(v0.clone(), v1.clone()), e.clone()),
                    m(&S::pair(v2.clone(), v1.clone()), e.clone()),
                ),
                S::identity(v0.clone(), v2.clone()),
            ))],
        ));
        out.push(group(
            "enumeration 5",
            Need::Maxim,
            vec![Expr::universal(
                0,
                S::or(t(m(&v0, e.clone())), t(S::not(m(&v0, e.clone())))),
            )],
        ));
        out.push(group(
            "prescribes",
            Need::Maxim,
            (0..g.aliases)
                .map(|n| {
                    let numeral = goedel_code(&(n as u64).into())
                        .as_expr()
                        .expect("prefix sizes are small");
                    m(&S::pair(numeral, Expr::noema(n as u64)), e.clone())
                })
                .collect(),
        ));
    } else {
        for name in [
            "enumeration 2",
            "enumeration 3",
            "enumeration 4",
            "enumeration 5",
            "prescribes",
        ] {
            out.push(skip(name, "enumerator disabled in this fragment"));
        }
    }
    out
}

/// Sentences the regulation checks classify, beyond the declared ones.
fn regulation_sentences(g: &Ground) -> Vec<Expr> {
    use Sugar as S;
    let t = S::truth;
    let x = g.x;
    let mut v = Vec::new();
    for a in &g.sentences {
        v.push(t(a.clone()));
        v.push(t(t(a.clone())));
        v.push(t(S::not(t(S::not(a.clone())))));
    }
    for a in &g.open {
        v.push(Expr::universal(x, t(a.clone())));
        v.push(t(Expr::universal(x, a.clone())));
        v.push(t(S::exists(x, a.clone())));
        v.push(S::exists(x, t(a.clone())));
    }
    v
}

/// Builds the fragment with every sentence the audit will classify.
pub fn prepare(spec: &FragmentSpec) -> Result<Fragment> {
    let base = Fragment::build(spec)?;
    let g = Ground::of(&base);
    let mut extra: Vec<Expr> = posit_groups(&g)
        .into_iter()
        .flat_map(|p| p.instances)
        .collect();
    extra.extend(regulation_sentences(&g));
    Fragment::build_with(spec, &extra)
}

/// Prepares, runs and audits a fragment.
pub fn audit(spec: &FragmentSpec) -> Result<(StageTrace, AuditReport)> {
    let trace = run(prepare(spec)?, spec.budget);
    let report = full_report(&trace)?;
    Ok((trace, report))
}

/// Every check over one trace.
pub fn full_report(t: &StageTrace) -> Result<AuditReport> {
    let mut r = check_posits(t)?
        .merge(check_regulations(t)?)
        .merge(check_exfalso(t)?)
        .merge(disconnection_census(t)?);
    r.mp_witness = find_mp_failure(t)?;
    Ok(r)
}

fn ground(t: &StageTrace) -> Result<Ground> {
    t.converged()?;
    Ok(t.with_fragment(Ground::of))
}

fn show(e: &Expr) -> String {
    e.to_string()
}

pub fn check_posits(t: &StageTrace) -> Result<AuditReport> {
    let g = ground(t)?;
    let groups = posit_groups(&g);
    let checks = groups
        .par_iter()
        .map(|p| -> Result<CheckReport> {
            let requirement = match p.need {
                Need::Maxim => "maxim",
                Need::Thesis => "thesis",
            };
            if let Some(reason) = p.skip {
                return Ok(CheckReport::skipped(p.name, requirement, reason));
            }
            let mut report = CheckReport::new(p.name, requirement);
            for a in &p.instances {
                let status = t.classify(a)?.status;
                let ok = match p.need {
                    Need::Maxim => status.is_maxim(),
                    Need::Thesis => status.is_thesis(),
                };
                report.record(ok, || show(a), || status.to_string());
            }
            Ok(report)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AuditReport {
        banner: t.banner().to_string(),
        checks,
        mp_witness: None,
    })
}

pub fn check_regulations(t: &StageTrace) -> Result<AuditReport> {
    use Sugar as S;
    let g = ground(t)?;
    let st = |a: &Expr| t.classify(a).map(|c| c.status);
    let truth = S::truth;
    let mut checks = Vec::new();

    let mut r1 = CheckReport::new("R1 modus maximus", "maxim");
    let mut r2 = CheckReport::new("R2 modus subiunctionis", "thesis");
    let mut r3 = CheckReport::new("R3 modus antecedentiae", "minor");
    let mut r13 = CheckReport::new("R13 modus minor", "minor");
    for (a, b) in g.pairs() {
        let imp = S::implies(a.clone(), b.clone());
        let (sa, sb, si) = (st(&a)?, st(&b)?, st(&imp)?);
        let witness = || show(&imp);
        if sa.is_maxim() && si.is_maxim() {
            r1.record(sb.is_maxim(), witness, || sb.to_string());
        }
        if sa.is_minor() && si.is_maxim() {
            r2.record(sb.is_thesis(), witness, || sb.to_string());
        }
        if sa.is_maxim() && si.is_minor() {
            r3.record(sb.is_minor(), witness, || sb.to_string());
        }
        if sa.is_minor() && sb.is_minor() {
            let c = S::and(
                S::not(truth(S::not(a.clone()))),
                S::not(truth(S::not(b.clone()))),
            );
            let sc = st(&c)?;
            r13.record(sc.is_minor(), || show(&c), || sc.to_string());
        }
    }

    let mut r4 = CheckReport::new("R4 modus ascendens maximus", "maxim");
    let mut r5 = CheckReport::new("R5 modus ascendens minor", "minor");
    let mut r6 = CheckReport::new("R6 modus descendens maximus", "maxim");
    let mut r7 = CheckReport::new("R7 modus descendens minor", "minor");
    let mut r8 = CheckReport::new("R8 modus scandens maximus", "maxim");
    let mut r9 = CheckReport::new("R9 modus scandens minor", "minor");
    for a in &g.sentences {
        let ta = truth(a.clone());
        let nt = S::not(truth(S::not(a.clone())));
        let (sa, sta, snt) = (st(a)?, st(&ta)?, st(&nt)?);
        if sa.is_maxim() {
            r4.record(sta.is_maxim(), || show(&ta), || sta.to_string());
        }
        if sa.is_minor() {
            r5.record(sta.is_minor(), || show(&ta), || sta.to_string());
        }
        if sta.is_maxim() {
            r6.record(sa.is_maxim(), || show(a), || sa.to_string());
        }
        if sta.is_minor() {
            r7.record(sa.is_minor(), || show(a), || sa.to_string());
        }
        if snt.is_maxim() {
            r8.record(sta.is_maxim(), || show(&ta), || sta.to_string());
        }
        if snt.is_minor() {
            r9.record(sta.is_minor(), || show(&ta), || sta.to_string());
        }
    }

    let mut r10 = CheckReport::new("R10 modus Barcanicus", "maxim");
    let mut r11 = CheckReport::new("R11 modus attestans generalis", "thesis");
    let mut r12 = CheckReport::new("R12 modus attestans minor", "minor");
    let x = g.x;
    for a in &g.open {
        let all_t = Expr::universal(x, truth(a.clone()));
        let t_all = truth(Expr::universal(x, a.clone()));
        let t_ex = truth(S::exists(x, a.clone()));
        let ex_t = S::exists(x, truth(a.clone()));
        let (s_all_t, s_t_all, s_t_ex, s_ex_t) = (st(&all_t)?, st(&t_all)?, st(&t_ex)?, st(&ex_t)?);
        if s_all_t.is_maxim() {
            r10.record(s_t_all.is_maxim(), || show(&t_all), || s_t_all.to_string());
        }
        if s_t_ex.is_thesis() {
            r11.record(s_ex_t.is_thesis(), || show(&ex_t), || s_ex_t.to_string());
        }
        if s_t_ex.is_minor() {
            r12.record(s_ex_t.is_minor(), || show(&ex_t), || s_ex_t.to_string());
        }
    }
    checks.extend([r1, r2, r3, r4, r5, r6, r7, r8, r9, r10, r11, r12, r13]);
    Ok(AuditReport {
        banner: t.banner().to_string(),
        checks,
        mp_witness: None,
    })
}

/// A thesis A and a thesis A → B whose consequent B is not a thesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MpWitness {
    pub antecedent: String,
    pub conditional: String,
    pub consequent: String,
}

pub fn find_mp_failure(t: &StageTrace) -> Result<Option<MpWitness>> {
    let g = ground(t)?;
    for (a, b) in g.pairs() {
        let imp = Sugar::implies(a.clone(), b.clone());
        if t.classify(&a)?.status.is_thesis()
            && t.classify(&imp)?.status.is_thesis()
            && !t.classify(&b)?.status.is_thesis()
        {
            return Ok(Some(MpWitness {
                antecedent: show(&a),
                conditional: show(&imp),
                consequent: show(&b),
            }));
        }
    }
    Ok(None)
}

pub fn check_exfalso(t: &StageTrace) -> Result<AuditReport> {
    let g = ground(t)?;
    let mut r = CheckReport::new("ex falso", "maxim");
    for (a, b) in g.pairs() {
        let e = Sugar::implies(Sugar::and(a.clone(), Sugar::not(a)), b);
        let s = t.classify(&e)?.status;
        r.record(s.is_maxim(), || show(&e), || s.to_string());
    }
    Ok(AuditReport {
        banner: t.banner().to_string(),
        checks: vec![r],
        mp_witness: None,
    })
}

/// Sentences (declared ones and their negjunctions) that disconnect with
/// some other such sentence.
pub fn disconnected(t: &StageTrace) -> Result<Vec<Expr>> {
    let g = ground(t)?;
    let vals: Vec<Valency> = g
        .sentences
        .iter()
        .map(|a| t.valency(a))
        .collect::<Result<_>>()?;
    Ok(g.sentences
        .iter()
        .zip(&vals)
        .filter(|(_, va)| {
            vals.iter()
                .any(|vb| va.is_thesis() && vb.is_thesis() && !va.and(vb).is_thesis())
        })
        .map(|(a, _)| a.clone())
        .collect())
}

/// Disconnected theses are exactly the minor ones; maxims and non-theses
/// connect with every sentence.
pub fn disconnection_census(t: &StageTrace) -> Result<AuditReport> {
    let g = ground(t)?;
    let cut = disconnected(t)?;
    let mut r = CheckReport::new("disconnection census", "minor");
    for a in &g.sentences {
        let s = t.classify(a)?.status;
        let is_cut = cut.contains(a);
        r.record(
            is_cut == (s == Status::MinorThesis),
            || show(a),
            || format!("{s}, {}", if is_cut { "disconnected" } else { "connected" }),
        );
    }
    Ok(AuditReport {
        banner: t.banner().to_string(),
        checks: vec![r],
        mp_witness: None,
    })
}

/// Outcome of comparing a = {x|x∈a} with a = ∅ as maxims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmptinessIdentity {
    pub term: String,
    pub self_abstraction: Status,
    pub empty: Status,
    pub holds: bool,
}

/// Whether ⊫ a = {x|x∈a} iff ⊫ a = ∅ on this fragment.
pub fn emptiness_identity(t: &StageTrace, a: &Expr) -> Result<EmptinessIdentity> {
    let x = top_index(a);
    let self_abs = Expr::abstraction(x, Sugar::member(Expr::noema(x), a.clone()));
    let l = t.classify(&Sugar::identity(a.clone(), self_abs))?.status;
    let r = t
        .classify(&Sugar::identity(a.clone(), Sugar::empty()))?
        .status;
    Ok(EmptinessIdentity {
        term: show(a),
        self_abstraction: l,
        empty: r,
        holds: l.is_maxim() == r.is_maxim(),
    })
}

/// Pairs of universe terms whose identity, once false at some stage, is
/// true again at a later one.
pub fn identity_persistence(t: &StageTrace) -> Result<Vec<(String, String)>> {
    let closure = t.converged()?;
    let u = t.universe();
    let mut out = Vec::new();
    for a in &u {
        for b in &u {
            let words = t.words(&Sugar::identity(a.clone(), b.clone()))?;
            let mixed = |bits: &mut dyn Iterator<Item = bool>| {
                let v: Vec<bool> = bits.collect();
                v.contains(&true) && v.contains(&false)
            };
            let mut bad = words.iter().any(|w| mixed(&mut w.cycle.iter().copied()))
                || mixed(&mut words[closure.repeats..].iter().flat_map(|w| w.bits()));
            let mut seen_false = false;
            for v in words.iter().flat_map(|w| w.bits()) {
                bad |= v && seen_false;
                seen_false |= !v;
            }
            if bad {
                out.push((show(a), show(b)));
            }
        }
    }
    Ok(out)
}
