use super::{branches, fmt_sets, Core, Dominance};
use crate::argset::ArgSet;
use crate::dp::NodeContext;
use crate::framework::ArgumentationFramework;

/// `⟨I, O, D⟩`: extension part, bag arguments attacking it, and bag
/// arguments it attacks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmCore {
    pub i: ArgSet,
    pub o: ArgSet,
    pub d: ArgSet,
}

impl Core for AdmCore {
    type Key = ArgSet;

    fn leaf(ctx: &NodeContext) -> Self {
        let e = ctx.bag.empty_like();
        AdmCore { i: e.clone(), o: e.clone(), d: e }
    }

    fn introduce(&self, ctx: &NodeContext, a: usize, out: &mut Vec<Self>) {
        let fw = &ctx.framework;
        for j in branches(&self.i, a) {
            if !fw.conflict_free(&j) {
                continue;
            }
            let o = &self.o | &fw.attackers_of_set(&j);
            let d = &self.d | &fw.targets_of_set(&j);
            out.push(AdmCore { i: j, o, d });
        }
    }

    fn remove(&self, a: usize) -> Option<Self> {
        // an unanswered attacker may not be forgotten
        if self.o.contains(a) && !self.d.contains(a) {
            return None;
        }
        Some(AdmCore {
            i: self.i.without(a),
            o: self.o.without(a),
            d: self.d.without(a),
        })
    }

    fn key(&self) -> ArgSet {
        self.i.clone()
    }

    fn join(&self, other: &Self) -> Self {
        AdmCore {
            i: self.i.clone(),
            o: &self.o | &other.o,
            d: &self.d | &other.d,
        }
    }

    fn extension(&self) -> &ArgSet {
        &self.i
    }

    fn sets(&self) -> Vec<&ArgSet> {
        vec![&self.i, &self.o, &self.d]
    }

    fn describe(&self, af: &ArgumentationFramework) -> String {
        fmt_sets(af, &[("I", &self.i), ("O", &self.o), ("D", &self.d)])
    }
}

/// Preferred: a counter-witness is an admissible superset of the witness.
impl Dominance for AdmCore {
    fn dominates(cw: &Self, w: &Self) -> Option<bool> {
        w.i.is_subset(&cw.i).then(|| cw.i != w.i)
    }
}
