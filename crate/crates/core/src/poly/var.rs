use std::fmt;

/// Role of an indeterminate.
///
/// Base coordinates are the only variables that can be differentiated;
/// section variables are symbolic parameters (components of sections,
/// arrow coordinates, unknowns of a linear ansatz).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarClass {
    BaseX,
    BaseY,
    SectionVar,
}

/// Short ASCII symbol name (at most four bytes), e.g. `u`, `mu'`, `a''`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol([u8; 4]);

impl Symbol {
    /// Panics if `name` is empty, longer than four bytes, or not ASCII.
    pub const fn new(name: &str) -> Symbol {
        let bytes = name.as_bytes();
        assert!(!bytes.is_empty() && bytes.len() <= 4, "symbol names are 1..=4 ASCII bytes");
        let mut out = [0u8; 4];
        let mut i = 0;
        while i < bytes.len() {
            assert!(bytes[i].is_ascii() && bytes[i] != 0);
            out[i] = bytes[i];
            i += 1;
        }
        Symbol(out)
    }

    pub fn as_str(&self) -> &str {
        let len = self.0.iter().position(|&b| b == 0).unwrap_or(4);
        // Constructed from ASCII only.
        std::str::from_utf8(&self.0[..len]).unwrap_or("?")
    }

    /// The same symbol with one more prime appended (`u` -> `u'`).
    pub fn primed(&self) -> Symbol {
        let len = self.0.iter().position(|&b| b == 0).unwrap_or(4);
        assert!(len < 4, "symbol too long to prime");
        let mut out = self.0;
        out[len] = b'\'';
        Symbol(out)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_str())
    }
}

const X_TAG: Symbol = Symbol::new("x");
const Y_TAG: Symbol = Symbol::new("y");

/// An indeterminate of the polynomial ring.
///
/// Ordering is by `(class, tag, index)`, which fixes the canonical term order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableId {
    class: VarClass,
    tag: Symbol,
    index: u8,
}

impl VariableId {
    /// Base coordinate `x^i`, `i` in `0..=7`.
    pub fn x(index: usize) -> VariableId {
        assert!(index < 8, "base coordinate index out of range: {index}");
        VariableId { class: VarClass::BaseX, tag: X_TAG, index: index as u8 }
    }

    /// Base coordinate `y^i`, `i` in `0..=7`.
    pub fn y(index: usize) -> VariableId {
        assert!(index < 8, "base coordinate index out of range: {index}");
        VariableId { class: VarClass::BaseY, tag: Y_TAG, index: index as u8 }
    }

    pub fn section(tag: Symbol, index: usize) -> VariableId {
        assert!(index < 256);
        VariableId { class: VarClass::SectionVar, tag, index: index as u8 }
    }

    pub fn class(&self) -> VarClass {
        self.class
    }

    pub fn tag(&self) -> Symbol {
        self.tag
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn is_base(&self) -> bool {
        self.class != VarClass::SectionVar
    }

    /// Position in the 16-dimensional base space: `x^i -> i`, `y^i -> 8 + i`.
    pub fn base_slot(&self) -> Option<usize> {
        match self.class {
            VarClass::BaseX => Some(self.index as usize),
            VarClass::BaseY => Some(8 + self.index as usize),
            VarClass::SectionVar => None,
        }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.tag, self.index)
    }
}

impl fmt::Debug for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols() {
        let u = Symbol::new("u");
        assert_eq!(u.primed().as_str(), "u'");
        assert_eq!(u.primed().primed().to_string(), "u''");
        assert_eq!(Symbol::new("mu").primed().as_str(), "mu'");
    }

    #[test]
    fn ordering_is_class_then_tag_then_index() {
        assert!(VariableId::x(7) < VariableId::y(0));
        assert!(VariableId::y(7) < VariableId::section(Symbol::new("a"), 0));
        assert!(VariableId::x(1) < VariableId::x(2));
        assert_eq!(VariableId::y(3).base_slot(), Some(11));
        assert_eq!(VariableId::section(Symbol::new("u"), 3).base_slot(), None);
    }
}
