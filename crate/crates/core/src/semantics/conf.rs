use super::{branches, fmt_sets, Core};
use crate::argset::ArgSet;
use crate::dp::NodeContext;
use crate::framework::ArgumentationFramework;

/// `⟨I⟩`: a conflict-free extension part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConfCore {
    pub i: ArgSet,
}

impl Core for ConfCore {
    type Key = ArgSet;

    fn leaf(ctx: &NodeContext) -> Self {
        ConfCore { i: ctx.bag.empty_like() }
    }

    fn introduce(&self, ctx: &NodeContext, a: usize, out: &mut Vec<Self>) {
        for j in branches(&self.i, a) {
            if ctx.framework.conflict_free(&j) {
                out.push(ConfCore { i: j });
            }
        }
    }

    fn remove(&self, a: usize) -> Option<Self> {
        Some(ConfCore { i: self.i.without(a) })
    }

    fn key(&self) -> ArgSet {
        self.i.clone()
    }

    fn join(&self, _other: &Self) -> Self {
        self.clone()
    }

    fn extension(&self) -> &ArgSet {
        &self.i
    }

    fn sets(&self) -> Vec<&ArgSet> {
        vec![&self.i]
    }

    fn describe(&self, af: &ArgumentationFramework) -> String {
        fmt_sets(af, &[("I", &self.i)])
    }
}
