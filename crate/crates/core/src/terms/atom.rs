use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Mutex, OnceLock};

/// An interned symbol. Two atoms are equal iff they point at the same
/// interned string, so equality and hashing never touch the bytes.
#[derive(Clone, Copy)]
pub struct Atom(&'static str);

fn interner() -> &'static Mutex<HashSet<&'static str>> {
    static INTERNER: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    INTERNER.get_or_init(|| Mutex::new(HashSet::new()))
}

impl Atom {
    pub fn new(name: &str) -> Atom {
        let mut set = interner().lock().unwrap_or_else(|e| e.into_inner());
        if let Some(&existing) = set.get(name) {
            return Atom(existing);
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        set.insert(leaked);
        Atom(leaked)
    }

    pub fn as_str(&self) -> &'static str {
        self.0
    }
}

impl PartialEq for Atom {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Atom {}

impl Hash for Atom {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.0.as_ptr() as usize).hash(state);
    }
}

// Ordering is lexicographic so that BTreeMaps keyed by atoms iterate in a
// stable, human-meaningful order.
impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            Ordering::Equal
        } else {
            self.0.cmp(other.0)
        }
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl From<&str> for Atom {
    fn from(s: &str) -> Self {
        Atom::new(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_gives_identity() {
        let a = Atom::new("lily");
        let b = Atom::new(&String::from("lily"));
        assert_eq!(a, b);
        assert!(std::ptr::eq(a.as_str(), b.as_str()));
        assert_ne!(a, Atom::new("barney"));
    }

    #[test]
    fn ordering_is_lexicographic() {
        let mut v = [Atom::new("sorry_for"), Atom::new("sadness"), Atom::new("anger")];
        v.sort();
        let names: Vec<_> = v.iter().map(|a| a.as_str()).collect();
        assert_eq!(names, ["anger", "sadness", "sorry_for"]);
    }
}
