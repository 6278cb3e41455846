use std::marker::PhantomData;

use super::{Core, Dominance};
use crate::argset::ArgSet;
use crate::dp::{LocalAlgorithm, NodeContext};
use crate::framework::ArgumentationFramework;

/// A witness core together with the counter-witness cores that still
/// dominate it. The flag records whether a counter-witness has already been
/// strictly larger somewhere below. The witness itself is always in the pool
/// with flag `false`, which seeds every later counter-witness.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CwRow<C> {
    pub core: C,
    pub cws: Vec<(C, bool)>,
}

impl<C: Core> CwRow<C> {
    fn new(core: C, mut cws: Vec<(C, bool)>) -> Self {
        cws.sort();
        cws.dedup();
        CwRow { core, cws }
    }

    /// Some counter-witness is already known to beat the witness.
    pub fn refuted(&self) -> bool {
        self.cws.iter().any(|(_, strict)| *strict)
    }
}

/// Maximality check by counter-witnesses on top of a single-table core.
pub struct Maximal<C>(&'static str, PhantomData<fn() -> C>);

impl<C> Maximal<C> {
    pub const fn new(name: &'static str) -> Self {
        Maximal(name, PhantomData)
    }
}

impl<C: Dominance> LocalAlgorithm for Maximal<C> {
    type Row = CwRow<C>;
    type Key = C::Key;

    fn name(&self) -> &'static str {
        self.0
    }

    fn leaf(&self, ctx: &NodeContext) -> CwRow<C> {
        let core = C::leaf(ctx);
        CwRow::new(core.clone(), vec![(core, false)])
    }

    fn introduce(&self, ctx: &NodeContext, a: usize, row: &CwRow<C>, out: &mut Vec<CwRow<C>>) {
        let mut witnesses = Vec::new();
        row.core.introduce(ctx, a, &mut witnesses);
        witnesses.retain(|w| ctx.cred_ok(w.extension()));
        if witnesses.is_empty() {
            return;
        }
        let mut grown: Vec<(C, bool)> = Vec::new();
        let mut buf = Vec::new();
        for (c, strict) in &row.cws {
            c.introduce(ctx, a, &mut buf);
            grown.extend(buf.drain(..).map(|g| (g, *strict)));
        }
        witnesses.sort();
        for w in witnesses {
            let cws = grown
                .iter()
                .filter_map(|(c, old)| C::dominates(c, &w).map(|s| (c.clone(), s || *old)))
                .collect();
            out.push(CwRow::new(w, cws));
        }
    }

    fn remove(&self, _ctx: &NodeContext, a: usize, row: &CwRow<C>) -> Option<CwRow<C>> {
        let core = row.core.remove(a)?;
        let cws = row
            .cws
            .iter()
            .filter_map(|(c, s)| c.remove(a).map(|c| (c, *s)))
            .collect();
        Some(CwRow::new(core, cws))
    }

    fn join_key(&self, row: &CwRow<C>) -> C::Key {
        row.core.key()
    }

    fn join(&self, _ctx: &NodeContext, l: &CwRow<C>, r: &CwRow<C>) -> Option<CwRow<C>> {
        let core = l.core.join(&r.core);
        let mut cws = Vec::new();
        for (c1, s1) in &l.cws {
            let k = c1.key();
            for (c2, s2) in &r.cws {
                if c2.key() == k {
                    cws.push((c1.join(c2), *s1 || *s2));
                }
            }
        }
        Some(CwRow::new(core, cws))
    }

    fn accept_root(&self, row: &CwRow<C>) -> bool {
        !row.refuted()
    }

    fn extension<'r>(&self, row: &'r CwRow<C>) -> &'r ArgSet {
        row.core.extension()
    }

    fn row_sets<'r>(&self, row: &'r CwRow<C>) -> Vec<&'r ArgSet> {
        let mut sets = row.core.sets();
        for (c, _) in &row.cws {
            sets.extend(c.sets());
        }
        sets
    }

    fn describe(&self, af: &ArgumentationFramework, row: &CwRow<C>) -> String {
        let cws: Vec<String> = row
            .cws
            .iter()
            .map(|(c, s)| format!("{}{}", c.describe(af), if *s { "!" } else { "" }))
            .collect();
        format!("{} cw[{}]", row.core.describe(af), cws.join(", "))
    }
}
