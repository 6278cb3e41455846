use super::{branches, fmt_sets, Core, Dominance};
use crate::argset::ArgSet;
use crate::dp::NodeContext;
use crate::framework::ArgumentationFramework;

/// `⟨I, A, AC⟩`: conflict-free part, bag arguments it attacks, and the
/// guessed range candidates that must end up attacked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StagCore {
    pub i: ArgSet,
    pub a: ArgSet,
    pub ac: ArgSet,
}

/// `guess_a`: all `(J, AC)` with `J ∩ AC = ∅`, `J` conflict-free and every
/// bag argument attacked by `J` among the candidates.
pub(crate) fn guess(ctx: &NodeContext, i: &ArgSet, ac: &ArgSet, a: usize) -> Vec<(ArgSet, ArgSet)> {
    let fw = &ctx.framework;
    let mut out = Vec::with_capacity(3);
    for j in branches(i, a) {
        if !fw.conflict_free(&j) {
            continue;
        }
        let attacked = fw.targets_of_set(&j);
        for cand in branches(ac, a) {
            if j.is_disjoint(&cand) && attacked.is_subset(&cand) {
                out.push((j.clone(), cand));
            }
        }
    }
    out
}

impl Core for StagCore {
    type Key = (ArgSet, ArgSet);

    fn leaf(ctx: &NodeContext) -> Self {
        let e = ctx.bag.empty_like();
        StagCore { i: e.clone(), a: e.clone(), ac: e }
    }

    fn introduce(&self, ctx: &NodeContext, a: usize, out: &mut Vec<Self>) {
        for (j, ac) in guess(ctx, &self.i, &self.ac, a) {
            let att = &self.a | &ctx.framework.targets_of_set(&j);
            out.push(StagCore { i: j, a: att, ac });
        }
    }

    fn remove(&self, x: usize) -> Option<Self> {
        // a range candidate must have been attacked before it is forgotten
        if self.ac.contains(x) && !self.a.contains(x) {
            return None;
        }
        Some(StagCore {
            i: self.i.without(x),
            a: self.a.without(x),
            ac: self.ac.without(x),
        })
    }

    fn key(&self) -> Self::Key {
        (self.i.clone(), self.ac.clone())
    }

    fn join(&self, other: &Self) -> Self {
        StagCore {
            i: self.i.clone(),
            a: &self.a | &other.a,
            ac: self.ac.clone(),
        }
    }

    fn extension(&self) -> &ArgSet {
        &self.i
    }

    fn sets(&self) -> Vec<&ArgSet> {
        vec![&self.i, &self.a, &self.ac]
    }

    fn describe(&self, af: &ArgumentationFramework) -> String {
        fmt_sets(af, &[("I", &self.i), ("A", &self.a), ("AC", &self.ac)])
    }
}

/// Range comparison on the bag: `J ∪ AC`.
pub(crate) fn range_dominates(cw_i: &ArgSet, cw_ac: &ArgSet, w_i: &ArgSet, w_ac: &ArgSet) -> Option<bool> {
    let cw = cw_i | cw_ac;
    let w = w_i | w_ac;
    w.is_subset(&cw).then(|| cw != w)
}

impl Dominance for StagCore {
    fn dominates(cw: &Self, w: &Self) -> Option<bool> {
        range_dominates(&cw.i, &cw.ac, &w.i, &w.ac)
    }
}
