use astro_float::{BigFloat, Consts, RoundingMode, Sign};
fn main() {
    let p = 256; // bits
    let rm = RoundingMode::ToEven;
    let mut cc = Consts::new().unwrap();
    let pi = cc.pi(p, rm);
    let x = BigFloat::parse("0.8", astro_float::Radix::Dec, p, rm, &mut cc);
    let s = x.sin(p, rm, &mut cc);
    println!("pi = {}", pi.format(astro_float::Radix::Dec, rm, &mut cc).unwrap());
    println!("sin(0.8) = {}", s.format(astro_float::Radix::Dec, rm, &mut cc).unwrap());
    let a = BigFloat::from_i64(3, p);
    let b = a.div(&BigFloat::from_i64(7, p), p, rm);
    println!("3/7 = {}", b.format(astro_float::Radix::Dec, rm, &mut cc).unwrap());
    println!("cmp: {:?}", b.cmp(&BigFloat::from_i64(1, p)));
    println!("sign: {:?}", b.sign());
    let _ = Sign::Pos;
}
