use crate::argset::ArgSet;
use crate::framework::ArgumentationFramework;

/// The framework restricted to a bag: `A_t = χ(t)`, `R_t = (A_t × A_t) ∩ R`.
#[derive(Debug, Clone)]
pub struct BagFramework {
    args: ArgSet,
    // per bag argument: (argument, targets within the bag, attackers within the bag)
    local: Vec<(usize, ArgSet, ArgSet)>,
}

impl BagFramework {
    pub fn new(af: &ArgumentationFramework, bag: &ArgSet) -> Self {
        let local = bag
            .iter()
            .map(|a| (a, af.targets_of(a) & bag, af.attackers_of(a) & bag))
            .collect();
        BagFramework {
            args: bag.clone(),
            local,
        }
    }

    pub fn args(&self) -> &ArgSet {
        &self.args
    }

    fn entry(&self, a: usize) -> &(usize, ArgSet, ArgSet) {
        self.local
            .iter()
            .find(|e| e.0 == a)
            .expect("argument is in the bag")
    }

    pub fn targets(&self, a: usize) -> &ArgSet {
        &self.entry(a).1
    }

    pub fn attackers(&self, a: usize) -> &ArgSet {
        &self.entry(a).2
    }

    pub fn attacks(&self) -> Vec<(usize, usize)> {
        self.local
            .iter()
            .flat_map(|(a, t, _)| t.iter().map(move |b| (*a, b)))
            .collect()
    }

    /// `S ⤳ T`: members of `s` attacking some member of `t`.
    pub fn attackers_into(&self, s: &ArgSet, t: &ArgSet) -> ArgSet {
        let mut out = self.args.empty_like();
        for (a, targets, _) in &self.local {
            if s.contains(*a) && targets.intersects(t) {
                out.insert(*a);
            }
        }
        out
    }

    /// `S ⤚ T`: members of `s` attacked by some member of `t`.
    pub fn attacked_from(&self, s: &ArgSet, t: &ArgSet) -> ArgSet {
        let mut out = self.args.empty_like();
        for (a, _, attackers) in &self.local {
            if s.contains(*a) && attackers.intersects(t) {
                out.insert(*a);
            }
        }
        out
    }

    /// Bag arguments attacked by `s`.
    pub fn targets_of_set(&self, s: &ArgSet) -> ArgSet {
        self.attacked_from(&self.args, s)
    }

    /// Bag arguments attacking `s`.
    pub fn attackers_of_set(&self, s: &ArgSet) -> ArgSet {
        self.attackers_into(&self.args, s)
    }

    pub fn conflict_free(&self, s: &ArgSet) -> bool {
        self.attackers_into(s, s).is_empty()
    }
}
