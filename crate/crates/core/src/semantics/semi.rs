use super::stag::{guess, range_dominates};
use super::{fmt_sets, Core, Dominance};
use crate::argset::ArgSet;
use crate::dp::NodeContext;
use crate::framework::ArgumentationFramework;

/// Admissible core plus range candidates: `⟨I, O, D, AC⟩` where `D` doubles
/// as the set of attacked bag arguments.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemiCore {
    pub i: ArgSet,
    pub o: ArgSet,
    pub d: ArgSet,
    pub ac: ArgSet,
}

impl Core for SemiCore {
    type Key = (ArgSet, ArgSet);

    fn leaf(ctx: &NodeContext) -> Self {
        let e = ctx.bag.empty_like();
        SemiCore {
            i: e.clone(),
            o: e.clone(),
            d: e.clone(),
            ac: e,
        }
    }

    fn introduce(&self, ctx: &NodeContext, a: usize, out: &mut Vec<Self>) {
        let fw = &ctx.framework;
        for (j, ac) in guess(ctx, &self.i, &self.ac, a) {
            let o = &self.o | &fw.attackers_of_set(&j);
            let d = &self.d | &fw.targets_of_set(&j);
            out.push(SemiCore { i: j, o, d, ac });
        }
    }

    fn remove(&self, x: usize) -> Option<Self> {
        let undefended = self.o.contains(x) && !self.d.contains(x);
        let unreached = self.ac.contains(x) && !self.d.contains(x);
        if undefended || unreached {
            return None;
        }
        Some(SemiCore {
            i: self.i.without(x),
            o: self.o.without(x),
            d: self.d.without(x),
            ac: self.ac.without(x),
        })
    }

    fn key(&self) -> Self::Key {
        (self.i.clone(), self.ac.clone())
    }

    fn join(&self, other: &Self) -> Self {
        SemiCore {
            i: self.i.clone(),
            o: &self.o | &other.o,
            d: &self.d | &other.d,
            ac: self.ac.clone(),
        }
    }

    fn extension(&self) -> &ArgSet {
        &self.i
    }

    fn sets(&self) -> Vec<&ArgSet> {
        vec![&self.i, &self.o, &self.d, &self.ac]
    }

    fn describe(&self, af: &ArgumentationFramework) -> String {
        fmt_sets(
            af,
            &[("I", &self.i), ("O", &self.o), ("D", &self.d), ("AC", &self.ac)],
        )
    }
}

impl Dominance for SemiCore {
    fn dominates(cw: &Self, w: &Self) -> Option<bool> {
        range_dominates(&cw.i, &cw.ac, &w.i, &w.ac)
    }
}
