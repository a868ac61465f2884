//! Action tables of the 32-dimensional induced module: for each generator and
//! each basis vector (v₁..v₈, u₁..u₈, χ₁..χ₈, σ₁..σ₈), the image vector.

pub(super) type Table = [[&'static str; 8]; 4];

pub(super) const Q10: Table = [
    ["chi1", "-E*chi1", "-E*chi1+chi4-i*chi5", "E*(chi4-i*chi5)+i/2*chi7", "0", "i*lam*chi2+2*E*chi6-chi8", "chi7", "i*lam*chi1"],
    ["0", "2*E*sigma2-sigma4+i*sigma6", "sigma3", "i*sigma5", "sigma5", "-E*sigma5", "-i*lam*sigma1+sigma8-E*sigma5", "E*(-i*lam*sigma1+sigma8)+i/2*lam*sigma3"],
    ["0", "(E*v1+v2)/2", "E*(v2-v3)+v4-i/2*v7", "i/2*v5", "v5/2", "(-i*lam*v1+v8)/2", "0", "-i/2*lam*(E*v1-v2)+E*v8"],
    ["u1/2", "(u4-i*u5)/2", "0", "E*u4-i/2*(E*u5-u6)", "0", "(E*u5+u6)/2", "-i/2*lam*u3+E*(u6-u7)+u8", "i/2*lam*u1"],
];

pub(super) const Q10D: Table = [
    ["chi2", "E*chi2", "E*chi2-chi3+i*chi6", "i/2*chi8", "i*lam*chi1+2*E*chi5-chi7", "0", "i*lam*chi2", "chi8"],
    ["2*E*sigma1-sigma3+i*sigma5", "0", "i*sigma6", "sigma4", "sigma6", "E*sigma6", "i*lam*sigma2+E*sigma6-sigma7", "i/2*lam*sigma4"],
    ["(E*v1-v2)/2", "0", "i/2*v6", "v4-i/2*v8", "(-i*lam*v1+v7)/2", "v6/2", "-i/2*lam*(E*v1+v2)+E*v7", "0"],
    ["(u3-i*u5)/2", "u2/2", "E*u3-i/2*(E*u5+u6)", "0", "(E*u5-u6)/2", "0", "i/2*lam*u2", "u8-i/2*lam*u4"],
];

pub(super) const Q01: Table = [
    ["sigma1", "-E*sigma1+sigma3+i*sigma5", "-E*sigma1", "-i/2*sigma8", "0", "-i*lam*sigma2+2*E*sigma6-sigma7", "-i*lam*sigma1", "sigma8"],
    ["0", "2*E*chi2-chi3-i*chi6", "-i*chi5", "chi4", "chi5", "i*lam*chi1-E*chi5+chi7", "-E*chi5", "-i/2*lam*chi4"],
    ["u1/2", "(u3+i*u5)/2", "E*u3+i/2*(E*u5-u7)", "0", "0", "(E*u5+u7)/2", "-i/2*lam*u1", "i/2*lam*u4+u8"],
    ["0", "(E*v1+v3)/2", "-i/2*v5", "v4+i/2*v8", "v5/2", "(i*lam*v1+v7)/2", "E*v7+i/2*lam*(E*v1-v3)", "0"],
];

pub(super) const Q01D: Table = [
    ["sigma2", "E*sigma2-sigma4-i*sigma6", "E*sigma2", "E*(sigma4+i*sigma6)-i/2*sigma7", "-i*lam*sigma1+2*E*sigma5-sigma8", "0", "sigma7", "-i*lam*sigma2"],
    ["2*E*chi1-chi4-i*chi5", "0", "chi3", "-i*chi6", "chi6", "-i*lam*chi2+E*chi6-chi8", "E*chi6", "i*lam*(E*chi2-chi3/2)+E*chi8"],
    ["(u4+i*u5)/2", "u2/2", "0", "E*u4+i/2*(E*u5+u7)", "(E*u5-u7)/2", "0", "i/2*lam*u3+E*(u6-u7)+u8", "-i/2*lam*u2"],
    ["(E*v1-v3)/2", "0", "E*(v2-v3)+v4+i/2*v7", "-i/2*v6", "(i*lam*v1+v8)/2", "v6/2", "0", "i/2*lam*(E*v1+v3)+E*v8"],
];

pub(super) const Z: Table = [
    ["u5", "u6", "u7", "u8", "lam*u1", "lam*u2", "lam*u3", "lam*u4"],
    ["v5", "v6", "v7", "v8", "lam*v1", "lam*v2", "lam*v3", "lam*v4"],
    ["-sigma5", "-sigma6", "-sigma7", "-sigma8", "-lam*sigma1", "-lam*sigma2", "-lam*sigma3", "-lam*sigma4"],
    ["-chi5", "-chi6", "-chi7", "-chi8", "-lam*chi1", "-lam*chi2", "-lam*chi3", "-lam*chi4"],
];
