use std::collections::{HashMap, HashSet};

use super::{Expr, Generator, Monomial, TermAcc};
use crate::error::{Error, Result};

impl Expr {
    /// Simultaneous substitution of generators, also inside atom arguments.
    pub fn substitute(&self, map: &HashMap<Generator, Expr>) -> Result<Expr> {
        if map.is_empty() {
            return Ok(self.clone());
        }
        self.rewrite(&|g: &Generator| map.get(g).cloned())
    }

    /// Replaces every atom of the named functions, with any derivative index,
    /// by zero. This is how an unknown coefficient is forced to vanish.
    pub fn vanish_functions(&self, names: &HashSet<String>) -> Expr {
        self.rewrite(&|g: &Generator| match g {
            Generator::Fn(a) if names.contains(a.name()) => Some(Expr::zero()),
            _ => None,
        })
        .expect("replacing atoms by zero cannot produce negative powers")
    }

    /// Generator-wise rewrite. `rule` returns `Some(replacement)` for the
    /// generators it handles; atoms it leaves alone have their arguments
    /// rewritten recursively.
    pub fn rewrite<F>(&self, rule: &F) -> Result<Expr>
    where
        F: Fn(&Generator) -> Option<Expr>,
    {
        let mut memo: HashMap<Generator, Option<Expr>> = HashMap::new();
        rewrite_inner(self, rule, &mut memo)
    }
}

fn rewrite_inner<F>(e: &Expr, rule: &F, memo: &mut HashMap<Generator, Option<Expr>>) -> Result<Expr>
where
    F: Fn(&Generator) -> Option<Expr>,
{
    let mut acc = TermAcc::new();
    let mut changed = false;
    for (m, c) in e.terms() {
        let mut kept: Vec<(Generator, i32)> = Vec::new();
        let mut product = Expr::from_rational(c.clone());
        for (g, exp) in m.factors() {
            match rewrite_generator(g, rule, memo)? {
                None => kept.push((g.clone(), *exp)),
                Some(r) => {
                    changed = true;
                    if *exp < 0 && r.try_inverse().is_err() {
                        return Err(Error::NegativeExponent {
                            generator: r.to_string(),
                            exponent: *exp as i64,
                        });
                    }
                    product = product.mul_expr(&r.pow(*exp)?);
                }
            }
        }
        let rest = Monomial::from_factors(kept)?;
        acc.push_scaled(&rest, &num_traits::One::one(), &product);
    }
    if !changed {
        return Ok(e.clone());
    }
    Ok(acc.finish())
}

fn rewrite_generator<F>(
    g: &Generator,
    rule: &F,
    memo: &mut HashMap<Generator, Option<Expr>>,
) -> Result<Option<Expr>>
where
    F: Fn(&Generator) -> Option<Expr>,
{
    if let Some(v) = memo.get(g) {
        return Ok(v.clone());
    }
    let value = match rule(g) {
        Some(r) => Some(r),
        None => match g {
            Generator::Fn(atom) => {
                let mut args = Vec::with_capacity(atom.arity());
                let mut any = false;
                for arg in atom.args() {
                    let new = rewrite_inner(arg, rule, memo)?;
                    any |= new != *arg;
                    args.push(new);
                }
                any.then(|| Expr::atom(atom.with_args(args)))
            }
            _ => None,
        },
    };
    memo.insert(g.clone(), value.clone());
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Indep;

    #[test]
    fn substitute_jet_by_zero() {
        let e = Expr::u(1, 0).pow(2).unwrap();
        let map = HashMap::from([(Generator::Jet(1, 0), Expr::zero())]);
        assert!(e.substitute(&map).unwrap().is_zero());
    }

    #[test]
    fn substitute_constant() {
        let e = Expr::constant("a") * Expr::u(0, 1);
        let map = HashMap::from([(Generator::constant("a"), Expr::one())]);
        assert_eq!(e.substitute(&map).unwrap(), Expr::u(0, 1));
    }

    #[test]
    fn substitute_inside_arguments() {
        let e = Expr::apply("M", vec![Expr::y()]);
        let map = HashMap::from([(Generator::Indep(Indep::Y), Expr::t())]);
        assert_eq!(
            e.substitute(&map).unwrap(),
            Expr::apply("M", vec![Expr::t()])
        );
    }

    #[test]
    fn negative_power_of_jet_rejected() {
        let e = Expr::constant("c").pow(-1).unwrap();
        let map = HashMap::from([(Generator::constant("c"), Expr::u(1, 0))]);
        assert!(matches!(
            e.substitute(&map),
            Err(Error::NegativeExponent { .. })
        ));
        let map = HashMap::from([(
            Generator::constant("c"),
            Expr::constant("k").scale(&crate::expr::integer(2)),
        )]);
        assert_eq!(
            e.substitute(&map).unwrap(),
            Expr::constant("k")
                .pow(-1)
                .unwrap()
                .scale(&crate::expr::rational(1, 2))
        );
    }

    #[test]
    fn vanishing_kills_all_derivatives() {
        let p = crate::expr::FnAtom::new("p", vec![2], vec![Expr::x()]).unwrap();
        let e = Expr::atom(p) * Expr::y() + Expr::apply("p", vec![Expr::x()]) + Expr::t();
        let names = HashSet::from(["p".to_string()]);
        assert_eq!(e.vanish_functions(&names), Expr::t());
    }
}
