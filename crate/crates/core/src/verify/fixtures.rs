//! Golden values used by the check suites. Every value records where it
//! comes from.

use super::Provenance;

pub struct Golden {
    pub name: &'static str,
    pub value: &'static str,
    pub provenance: Provenance,
    pub anchor: &'static str,
}

macro_rules! golden {
    ($id:ident, $name:literal, $value:literal, $prov:ident, $anchor:literal) => {
        pub const $id: Golden = Golden { name: $name, value: $value, provenance: Provenance::$prov, anchor: $anchor };
    };
}

golden!(
    LOWERING_INPUT,
    "lowering-input",
    "x[1]*x[2]*x[5] + x[8] + x[4]^2",
    Published,
    "worked example of the lowering operator"
);
golden!(
    LOWERING_OUTPUT,
    "lowering-output",
    "x[1]*x[5] + x[2]*x[4] + x[1]^2*x[4] + x[3]^2",
    Published,
    "worked example of the lowering operator, result of flat[2]"
);
golden!(A1_SERIES, "a1-series", "d[0]", Published, "Thom series of A1");
golden!(
    A2_SERIES_W2,
    "a2-series-w2",
    "d[0]^2 + d[-1]*d[1] + 2*d[-2]*d[2]",
    Published,
    "Thom series of A2, terms with |index| <= 2"
);
golden!(
    A2_SERIES_W4,
    "a2-series-w4",
    "d[0]^2 + d[-1]*d[1] + 2*d[-2]*d[2] + 4*d[-3]*d[3] + 8*d[-4]*d[4]",
    Published,
    "Thom series of A2, the five tabulated terms"
);
golden!(A2_TP_K0, "a2-tp-k0", "c[1]^2 + c[2]", Published, "Thom polynomial of the cusp A2, m = n");
golden!(A2_TP_K1, "a2-tp-k1", "c[2]^2 + c[1]*c[3] + 2*c[4]", Published, "Thom polynomial of A2, m = n + 1");
golden!(
    A2_SHARP,
    "a2-sharp",
    "cs[2]^2 + cs[1]*cs[3] + 2*cs[4]",
    Published,
    "A2 Thom polynomial for m = n + 1 written in twisted classes"
);
golden!(
    A2_SCHUR_K0,
    "a2-schur-k0",
    "(1,1):1 (2):2",
    Derived,
    "degree-2 triangular solve against s(1,1) = c1^2 - c2, s(2) = c2"
);
golden!(
    A2_SCHUR_K1,
    "a2-schur-k1",
    "(2,2):1 (3,1):2 (4):4",
    Derived,
    "degree-4 triangular solve against Jacobi-Trudi determinants"
);
golden!(SCHUR_NEGATIVE, "schur-negative", "(1,1):1 (2):-1", Derived, "c1^2 - 2c2 = s(1,1) - s(2)");
golden!(
    MASIK_SHARP,
    "masik-sharp",
    "2*cs[1]*cs[2]^3 - 2*cs[1]^2*cs[2]*cs[3] + 2*cs[2]^2*cs[3] + 2*cs[1]*cs[3]^2 - 4*cs[1]*cs[2]*cs[4] + 2*cs[3]*cs[4] - 2*cs[2]*cs[5]",
    Published,
    "Thom polynomial of the algebra C[x,y]/(x^3,y^2), equidimensional"
);
golden!(
    MASIK_TWIST_NUM,
    "masik-twist-num",
    "1 + 2*y",
    Published,
    "target weight of x -> x^2 under U(1): rho tensor rho"
);
golden!(MASIK_TWIST_DEN, "masik-twist-den", "1 + y", Published, "source weight of x -> x^2 under U(1): rho");
golden!(MASIK_Y5, "masik-y5", "4*c[1]^2 + 4*c[2]", Published, "coefficient of y^5 after twisting by x -> x^2");
golden!(
    MASIK_Y4,
    "masik-y4",
    "2*c[1]*c[2] - 2*c[1]^3 + 20*c[3]",
    Published,
    "coefficient of y^4 after twisting by x -> x^2"
);
golden!(
    A3_TP_K0,
    "a3-tp-k0",
    "c[1]^3 + 3*c[1]*c[2] + 2*c[3]",
    Derived,
    "classical equidimensional A3 Thom polynomial (external tables), used to pick the A3 summation ranges"
);
golden!(
    AIJ_CORNERS,
    "aij-corners",
    "a(0,0)=0 a(1,0)=1 a(0,1)=1",
    Derived,
    "series expansion: numerator vanishes at the origin, u(1-u)/(1-3u) = u + 2u^2 + ..."
);
golden!(CUSP_CODIM, "cusp-codim", "2", Published, "the cusp orbit in E(n,n) is 2-codimensional");
