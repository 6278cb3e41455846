use super::{branches, fmt_sets, Core};
use crate::argset::ArgSet;
use crate::dp::NodeContext;
use crate::framework::ArgumentationFramework;

/// `⟨I, D⟩`: extension part and the bag arguments it attacks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StabCore {
    pub i: ArgSet,
    pub d: ArgSet,
}

impl Core for StabCore {
    type Key = ArgSet;

    fn leaf(ctx: &NodeContext) -> Self {
        let e = ctx.bag.empty_like();
        StabCore { i: e.clone(), d: e }
    }

    fn introduce(&self, ctx: &NodeContext, a: usize, out: &mut Vec<Self>) {
        let fw = &ctx.framework;
        for j in branches(&self.i, a) {
            if fw.conflict_free(&j) {
                let d = &self.d | &fw.targets_of_set(&j);
                out.push(StabCore { i: j, d });
            }
        }
    }

    fn remove(&self, a: usize) -> Option<Self> {
        (self.i.contains(a) || self.d.contains(a)).then(|| StabCore {
            i: self.i.without(a),
            d: self.d.without(a),
        })
    }

    fn key(&self) -> ArgSet {
        self.i.clone()
    }

    fn join(&self, other: &Self) -> Self {
        StabCore {
            i: self.i.clone(),
            d: &self.d | &other.d,
        }
    }

    fn extension(&self) -> &ArgSet {
        &self.i
    }

    fn sets(&self) -> Vec<&ArgSet> {
        vec![&self.i, &self.d]
    }

    fn describe(&self, af: &ArgumentationFramework) -> String {
        fmt_sets(af, &[("I", &self.i), ("D", &self.d)])
    }
}
