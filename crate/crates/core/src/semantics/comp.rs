use super::{fmt_sets, Core};
use crate::argset::ArgSet;
use crate::dp::NodeContext;
use crate::framework::ArgumentationFramework;

/// Five-state row: every bag argument is in `I`, out (`dc`) or undecided
/// (`oc`). `d ⊆ dc` are the out arguments already attacked by the
/// extension; `o ⊆ oc` the undecided ones already attacked by an
/// undecided argument.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompCore {
    pub i: ArgSet,
    pub d: ArgSet,
    pub dc: ArgSet,
    pub o: ArgSet,
    pub oc: ArgSet,
}

impl Core for CompCore {
    type Key = (ArgSet, ArgSet, ArgSet);

    fn leaf(ctx: &NodeContext) -> Self {
        let e = ctx.bag.empty_like();
        CompCore {
            i: e.clone(),
            d: e.clone(),
            dc: e.clone(),
            o: e.clone(),
            oc: e,
        }
    }

    fn introduce(&self, ctx: &NodeContext, a: usize, out: &mut Vec<Self>) {
        let fw = &ctx.framework;
        let labels = [
            (self.i.with(a), self.dc.clone(), self.oc.clone()),
            (self.i.clone(), self.dc.with(a), self.oc.clone()),
            (self.i.clone(), self.dc.clone(), self.oc.with(a)),
        ];
        for (j, dc, oc) in labels {
            if !fw.conflict_free(&j)
                || !fw.attackers_into(&j, &oc).is_empty()
                || !fw.attackers_into(&oc, &j).is_empty()
            {
                continue;
            }
            let d = &self.d | &fw.attacked_from(&dc, &j);
            let o = &self.o | &fw.attacked_from(&oc, &oc);
            out.push(CompCore { i: j, d, dc, o, oc });
        }
    }

    fn remove(&self, a: usize) -> Option<Self> {
        let settled = self.i.contains(a) || self.d.contains(a) || self.o.contains(a);
        settled.then(|| CompCore {
            i: self.i.without(a),
            d: self.d.without(a),
            dc: self.dc.without(a),
            o: self.o.without(a),
            oc: self.oc.without(a),
        })
    }

    fn key(&self) -> Self::Key {
        (self.i.clone(), self.dc.clone(), self.oc.clone())
    }

    fn join(&self, other: &Self) -> Self {
        CompCore {
            i: self.i.clone(),
            d: &self.d | &other.d,
            dc: self.dc.clone(),
            o: &self.o | &other.o,
            oc: self.oc.clone(),
        }
    }

    fn extension(&self) -> &ArgSet {
        &self.i
    }

    fn sets(&self) -> Vec<&ArgSet> {
        vec![&self.i, &self.d, &self.dc, &self.o, &self.oc]
    }

    fn describe(&self, af: &ArgumentationFramework) -> String {
        fmt_sets(
            af,
            &[
                ("I", &self.i),
                ("D", &self.d),
                ("DC", &self.dc),
                ("O", &self.o),
                ("OC", &self.oc),
            ],
        )
    }
}
