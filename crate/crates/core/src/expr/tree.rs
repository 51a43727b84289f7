use super::{Expr, FnAtom, Generator, Rational};
use crate::error::{Error, Result};

/// An unnormalized expression tree, as produced by the parser or by tests.
#[derive(Clone, Debug, PartialEq)]
pub enum Tree {
    Num(Rational),
    Gen(Generator),
    Apply {
        name: String,
        deriv: Option<Vec<u32>>,
        args: Vec<Tree>,
    },
    Sum(Vec<Tree>),
    Product(Vec<Tree>),
    Neg(Box<Tree>),
    Quotient(Box<Tree>, Box<Tree>),
    Pow(Box<Tree>, i32),
}

impl Tree {
    /// Brings the tree into canonical form.
    pub fn normalize(&self) -> Result<Expr> {
        match self {
            Tree::Num(c) => Ok(Expr::from_rational(c.clone())),
            Tree::Gen(g) => Ok(Expr::gen(g.clone())),
            Tree::Apply { name, deriv, args } => {
                let args = args
                    .iter()
                    .map(Tree::normalize)
                    .collect::<Result<Vec<_>>>()?;
                let deriv = deriv.clone().unwrap_or_else(|| vec![0; args.len()]);
                Ok(Expr::atom(FnAtom::new(name, deriv, args)?))
            }
            Tree::Sum(parts) => Ok(parts
                .iter()
                .map(Tree::normalize)
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .sum()),
            Tree::Product(parts) => parts
                .iter()
                .try_fold(Expr::one(), |acc, p| Ok(acc.mul_expr(&p.normalize()?))),
            Tree::Neg(inner) => Ok(-inner.normalize()?),
            Tree::Quotient(num, den) => {
                let den = den.normalize()?;
                if den.is_zero() {
                    return Err(Error::NotInvertible("0".into()));
                }
                Ok(num.normalize()?.mul_expr(&den.try_inverse()?))
            }
            Tree::Pow(base, exp) => {
                let base = base.normalize()?;
                if *exp < 0 {
                    if let Some(g) = base.as_generator() {
                        if !g.is_constant() {
                            return Err(Error::NegativeExponent {
                                generator: g.to_string(),
                                exponent: *exp as i64,
                            });
                        }
                    }
                }
                base.pow(*exp)
            }
        }
    }
}
