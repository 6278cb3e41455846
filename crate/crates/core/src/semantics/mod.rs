//! Table algorithms for each semantics.
//!
//! Every semantics has a row *core* ([`Core`]). Single-table semantics use
//! the core as the row ([`Plain`]); the subset- or range-maximal ones wrap
//! it with a pool of counter-witnesses ([`Maximal`]).

mod adm;
mod comp;
mod conf;
mod counter;
mod semi;
mod stab;
mod stag;

use std::fmt::Debug;
use std::hash::Hash;
use std::marker::PhantomData;

pub use adm::AdmCore;
pub use comp::CompCore;
pub use conf::ConfCore;
pub use counter::{CwRow, Maximal};
pub use semi::SemiCore;
pub use stab::StabCore;
pub use stag::StagCore;

use crate::argset::ArgSet;
use crate::dp::{LocalAlgorithm, NodeContext};
use crate::framework::{ArgumentationFramework, SemanticsKind};

/// Row content of one semantics, without counter-witnesses.
pub trait Core: Clone + Eq + Hash + Ord + Debug + Send + Sync {
    type Key: Eq + Hash + Clone;

    fn leaf(ctx: &NodeContext) -> Self;
    /// Every way of extending the row by the introduced argument `a`,
    /// without the credulous filter.
    fn introduce(&self, ctx: &NodeContext, a: usize, out: &mut Vec<Self>);
    /// The row with `a` forgotten, or `None` if forgetting it now is illegal.
    fn remove(&self, a: usize) -> Option<Self>;
    fn key(&self) -> Self::Key;
    /// Combines two rows with equal keys.
    fn join(&self, other: &Self) -> Self;
    fn extension(&self) -> &ArgSet;
    fn sets(&self) -> Vec<&ArgSet>;
    fn describe(&self, af: &ArgumentationFramework) -> String;
}

/// How a counter-witness compares to its witness on the current bag.
pub trait Dominance: Core {
    /// `None` if `cw` can no longer dominate `w`; otherwise whether it is
    /// already strictly larger here.
    fn dominates(cw: &Self, w: &Self) -> Option<bool>;
}

/// Single-table algorithm whose rows are the cores themselves.
pub struct Plain<C>(&'static str, PhantomData<fn() -> C>);

impl<C> Plain<C> {
    pub const fn new(name: &'static str) -> Self {
        Plain(name, PhantomData)
    }
}

impl<C: Core> LocalAlgorithm for Plain<C> {
    type Row = C;
    type Key = C::Key;

    fn name(&self) -> &'static str {
        self.0
    }

    fn leaf(&self, ctx: &NodeContext) -> C {
        C::leaf(ctx)
    }

    fn introduce(&self, ctx: &NodeContext, a: usize, row: &C, out: &mut Vec<C>) {
        let start = out.len();
        row.introduce(ctx, a, out);
        let mut k = start;
        while k < out.len() {
            if ctx.cred_ok(out[k].extension()) {
                k += 1;
            } else {
                out.swap_remove(k);
            }
        }
        out[start..].sort();
    }

    fn remove(&self, _ctx: &NodeContext, a: usize, row: &C) -> Option<C> {
        row.remove(a)
    }

    fn join_key(&self, row: &C) -> C::Key {
        row.key()
    }

    fn join(&self, _ctx: &NodeContext, l: &C, r: &C) -> Option<C> {
        Some(l.join(r))
    }

    fn extension<'r>(&self, row: &'r C) -> &'r ArgSet {
        row.extension()
    }

    fn row_sets<'r>(&self, row: &'r C) -> Vec<&'r ArgSet> {
        row.sets()
    }

    fn describe(&self, af: &ArgumentationFramework, row: &C) -> String {
        row.describe(af)
    }
}

pub type Conf = Plain<ConfCore>;
pub type Adm = Plain<AdmCore>;
pub type Stab = Plain<StabCore>;
pub type Comp = Plain<CompCore>;
pub type Pref = Maximal<AdmCore>;
pub type Semi = Maximal<SemiCore>;
pub type Stag = Maximal<StagCore>;

pub const CONF: Conf = Plain::new("CONF");
pub const ADM: Adm = Plain::new("ADM");
pub const STAB: Stab = Plain::new("STAB");
pub const COMP: Comp = Plain::new("COMP");
pub const PREF: Pref = Maximal::new("PREF");
pub const SEMI: Semi = Maximal::new("SEMI");
pub const STAG: Stag = Maximal::new("STAG");

/// Code that is generic over the table algorithm, dispatched by semantics.
pub trait AlgorithmVisitor {
    type Output;
    fn visit<A: LocalAlgorithm>(self, alg: &A) -> Self::Output;
}

pub fn with_algorithm<V: AlgorithmVisitor>(sem: SemanticsKind, v: V) -> V::Output {
    match sem {
        SemanticsKind::ConflictFree => v.visit(&CONF),
        SemanticsKind::Admissible => v.visit(&ADM),
        SemanticsKind::Complete => v.visit(&COMP),
        SemanticsKind::Preferred => v.visit(&PREF),
        SemanticsKind::SemiStable => v.visit(&SEMI),
        SemanticsKind::Stable => v.visit(&STAB),
        SemanticsKind::Stage => v.visit(&STAG),
    }
}

pub(crate) fn fmt_sets(af: &ArgumentationFramework, parts: &[(&str, &ArgSet)]) -> String {
    let body: Vec<String> = parts
        .iter()
        .map(|(label, s)| format!("{label}={}", af.format_set(s)))
        .collect();
    format!("<{}>", body.join(" "))
}

/// Both guesses for `a` in a set: without and with it.
pub(crate) fn branches(base: &ArgSet, a: usize) -> [ArgSet; 2] {
    [base.clone(), base.with(a)]
}
