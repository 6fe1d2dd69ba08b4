//! Group literal parser.
//!
//! Grammar: `atom := "C"<int> | "A4" | "D12" | "Dic12" | "Z"<int>;
//! spec := atom ("x" atom)*`. Both `C<n>` and `Z<n>` denote the cyclic
//! group of order n; products are direct products, left-associated.

use brace_core::{Error, FiniteGroup};

/// Parses a group literal; errors carry the byte position of the problem.
pub fn parse_group_spec(input: &str) -> Result<FiniteGroup, Error> {
    let mut parser = Parser { input, pos: 0 };
    let mut group = parser.atom()?;
    while !parser.done() {
        parser.expect_x()?;
        let rhs = parser.atom()?;
        group = FiniteGroup::direct_product(&group, &rhs)?;
    }
    Ok(group)
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn done(&self) -> bool {
        self.pos >= self.input.len()
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn error(&self, message: &str) -> Error {
        Error::InvalidArgument(format!(
            "group spec parse error at position {}: {message} (input {:?})",
            self.pos, self.input
        ))
    }

    fn expect_x(&mut self) -> Result<(), Error> {
        if self.rest().starts_with('x') {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error("expected 'x' between atoms"))
        }
    }

    fn atom(&mut self) -> Result<FiniteGroup, Error> {
        let rest = self.rest();
        if rest.starts_with("Dic12") {
            self.pos += 5;
            return Ok(FiniteGroup::dicyclic_12());
        }
        if rest.starts_with("D12") {
            self.pos += 3;
            return Ok(FiniteGroup::dihedral(6));
        }
        if rest.starts_with("A4") {
            self.pos += 2;
            return Ok(FiniteGroup::alternating_4());
        }
        if rest.starts_with('C') || rest.starts_with('Z') {
            self.pos += 1;
            let digits: String = self
                .rest()
                .chars()
                .take_while(|c| c.is_ascii_digit())
                .collect();
            if digits.is_empty() {
                return Err(self.error("expected an integer after C/Z"));
            }
            self.pos += digits.len();
            let n: usize = digits
                .parse()
                .map_err(|_| self.error("integer out of range"))?;
            if n == 0 {
                return Err(self.error("cyclic order must be positive"));
            }
            if n > brace_core::group::MAX_ORDER {
                return Err(Error::ResourceBound {
                    what: "cyclic group order",
                    needed: n,
                    bound: brace_core::group::MAX_ORDER,
                });
            }
            return Ok(FiniteGroup::cyclic(n));
        }
        Err(self.error("unknown atom (expected C<n>, Z<n>, A4, D12 or Dic12)"))
    }
}
