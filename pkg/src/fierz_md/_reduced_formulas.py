"""Transcribed closed-form expressions for the reduced systems.

Each entry is a product/sum expression in the following names:

  s, o            sigma and omega (omega is imaginary: o = i w)
  D               sigma^2 - omega^2
  ja .. jd, ka .. kd   profile functions of the current and axial current
  <name>_<ds>     partial derivatives, e.g. s_tr = d_t d_r sigma, kd_rr
  r               radial invariant (r or rho)
  q, m            charge and mass
  pm              branch sign (+1 or -1) of the spherical k elimination
  I               imaginary unit

The strings are expanded once into term lists (coefficient, factors with
powers) by ``reductions.term_list``.
"""

EXPRESSIONS = {
    "sph_Ba": (
        "(+pm*(I/2)*(s_r*o-s*o_r)-m*s*ja)*(q*D)**(-1)"
    ),
    "sph_Bb": (
        "(-pm*(I/(2*r))*(s_t*o-s*o_t)-m*s*jb)*(q*D)**(-1)"
    ),
    "sph_Fa": (
        "(1/(q*r))*D**(-2)*(-2*m*(s*ja*(s*s_r-o*o_r)+r*s*jb*(s*s_t-o*o_t))+pm*I*(s*o*(s_r**(2"
        ")-s_t**(2)+o_r**(2)-o_t**(2))+(s**(2)+o**(2))*(s_t*o_t-s_r*o_r)))+(1/(q*r))*D**(-1)*"
        "(m*(s_r*ja+s*ja_r+r*s_t*jb+r*s*jb_t)+pm*(I/2)*(s_tt*o-s*o_tt-s_rr*o+s*o_rr))"
    ),
    "sph_md1": (
        "-D**(-3)*4*(s*s_r-o*o_r)*(-2*m*(s*ja*(s*s_r-o*o_r)+r*s*jb*(s*s_t-o*o_t))+pm*I*((s**("
        "2)+o**(2))*(s_t*o_t-s_r*o_r)+s*o*(s_r**(2)-s_t**(2)+o_r**(2)-o_t**(2))))+D**(-2)*(-2"
        "*m*((3*s*jb+r*s_r*jb+r*s*jb_r)*(s*s_t-o*o_t)+(2*s_r*ja+2*s*ja_r+2*s*ja/r+r*s_t*jb+r*"
        "s*jb_t)*(s*s_r-o*o_r)+s*ja*(s_r**(2)+s*s_rr-o_r**(2)-o*o_rr)+r*s*jb*(s*s_tr+s_t*s_r-"
        "o*o_tr-o_t*o_r))+pm*I*(2*(s*s_r+o*o_r+s**(2)/r+o**(2)/r)*(s_t*o_t-s_r*o_r)+(s*o_tt-s"
        "_tt*o-s*o_rr+s_rr*o)*(s*s_r-o*o_r)+(s*o_r+s_r*o+2*s*o/r)*(s_r**(2)-s_t**(2)+o_r**(2)"
        "-o_t**(2))+(s**(2)+o**(2))*(s_t*o_tr+s_tr*o_t-s_r*o_rr-s_rr*o_r)+2*s*o*(s_r*s_rr-s_t"
        "*s_tr+o_r*o_rr-o_t*o_tr)))+D**(-1)*(m*(s_rr*ja+2*s_r*ja_r+s*ja_rr+r*s_tr*jb+r*s_t*jb"
        "_r+r*s_r*jb_t+r*s*jb_tr+3*s_t*jb+3*s*jb_t+2*s_r*ja/r+2*s*ja_r/r)+pm*I*((1/2)*(s*o_rr"
        "r+s_r*o_rr-s_rr*o_r-s_rrr*o-s*o_ttr-s_r*o_tt+s_tt*o_r+s_ttr*o)-(1/r)*(s*o_tt-s_tt*o-"
        "s*o_rr+s_rr*o)))"
    ),
    "sph_md2": (
        "D**(-3)*4*(s*s_t-o*o_t)*(-2*m*(s*ja*(s*s_r-o*o_r)+r*s*jb*(s*s_t-o*o_t))+pm*I*((s**(2"
        ")+o**(2))*(s_t*o_t-s_r*o_r)+s*o*(s_r**(2)-s_t**(2)+o_r**(2)-o_t**(2))))-D**(-2)*(-2*"
        "m*((s*ja_r+s_r*ja+2*r*s_t*jb+2*r*s*jb_t)*(s*s_t-o*o_t)+(s*ja_t+s_t*ja)*(s*s_r-o*o_r)"
        "+s*ja*(s*s_tr+s_t*s_r-o*o_tr-o_t*o_r)+r*s*jb*(s_t**(2)+s*s_tt-o_t**(2)-o*o_tt))+pm*I"
        "*((s_rr*o-s*o_rr-s_tt*o+s*o_tt)*(s*s_t-o*o_t)+2*(s*s_t+o*o_t)*(s_t*o_t-s_r*o_r)+(s_t"
        "*o+s*o_t)*(s_r**(2)-s_t**(2)+o_r**(2)-o_t**(2))+(s**(2)+o**(2))*(s_tt*o_t+s_t*o_tt-s"
        "_tr*o_r-s_r*o_tr)+2*s*o*(s_tr*s_r-s_tt*s_t+o_tr*o_r-o_tt*o_t)))-D**(-1)*(m*(s_tr*ja+"
        "s_t*ja_r+s_r*ja_t+s*ja_tr+r*s_tt*jb+2*r*s_t*jb_t+r*s*jb_tt)+pm*(I/2)*(s_ttt*o+s_tt*o"
        "_t-s_t*o_tt-s*o_ttt-s_trr*o-s_rr*o_t+s_t*o_rr+s*o_trr))"
    ),
    "cyl_Ba": (
        "((r*(jc_r*kd+jc*kd_r-jd_r*kc-jd*kc_r)+2*(jc*kd-jd*kc)-2*m*s*ja)*D+r*(jd*kc-jc*kd)*(s"
        "*s_r-o*o_r)+I*r*(ja*kb-jb*ka)*(s_r*o-s*o_r))*(2*q*D**(2))**(-1)"
    ),
    "cyl_Bb": (
        "((jd_t*kc+jd*kc_t-jc_t*kd-jc*kd_t-2*m*s*jb)*D+(jc*kd-jd*kc)*(s*s_t-o*o_t)+I*(jb*ka-j"
        "a*kb)*(s_t*o-s*o_t))*(2*q*D**(2))**(-1)"
    ),
    "cyl_Bc": (
        "((jb_t*kd+jb*kd_t-jd_t*kb-jd*kb_t+(1/r)*(ja_r*kd+ja*kd_r-jd_r*ka-jd*ka_r)-2*m*s*jc)*"
        "D+(jd*kb-jb*kd)*(s*s_t-o*o_t)+(1/r)*(jd*ka-ja*kd)*(s*s_r-o*o_r)+I*(jc*ka-ja*kc)*(s_t"
        "*o-s*o_t)+I*r*(jc*kb-jb*kc)*(s_r*o-s*o_r))*(2*q*D**(2))**(-1)"
    ),
    "cyl_Bd": (
        "((r**(2)*(jc_t*kb+jc*kb_t-jb_t*kc-jb*kc_t)+r*(jc_r*ka+jc*ka_r-ja_r*kc-ja*kc_r)+2*(jc"
        "*ka-ja*kc)-2*m*s*jd)*D+r**(2)*(jb*kc-jc*kb)*(s*s_t-o*o_t)+r*(ja*kc-jc*ka)*(s*s_r-o*o"
        "_r)+I*(jd*ka-ja*kd)*(s_t*o-s*o_t)+I*r*(jd*kb-jb*kd)*(s_r*o-s*o_r))*(2*q*D**(2))**(-1"
        ")"
    ),
    "cyl_Fa": (
        "-2*(q*D**(3))**(-1)*((jd*kc_t-jc*kd_t-kd*jc_t+kc*jd_t-2*m*s*jb)*(s*s_t-o*o_t)*D+(jc*"
        "kd_r-jd*kc_r-kc*jd_r+kd*jc_r)*(s*s_r-o*o_r)*D+(jc*kd-jd*kc)*(s*s_t-o*o_t)**(2)+(jd*k"
        "c-jc*kd)*(s*s_r-o*o_r)**(2)+(2/r)*(jc*kd-jd*kc-m*s*ja)*(s*s_r-o*o_r)*D+I*((jb*ka-ja*"
        "kb)*(s_t*o-s*o_t)*(s*s_t-o*o_t)+(ja*kb-jb*ka)*(s_r*o-s*o_r)*(s*s_r-o*o_r)))+(2*q*D**"
        "(2))**(-1)*((jd*kc_tt+2*jd_t*kc_t+jd_tt*kc-jc*kd_tt-2*jc_t*kd_t-jc_tt*kd+jc*kd_rr+2*"
        "jc_r*kd_r+jc_rr*kd-jd*kc_rr-2*jd_r*kc_r-jd_rr*kc-2*m*s_t*jb-2*m*s*jb_t)*D+(jd*kc_t+j"
        "d_t*kc-jc*kd_t-jc_t*kd-4*m*s*jb)*(s*s_t-o*o_t)+(jc*kd_r+jc_r*kd-jd*kc_r-jd_r*kc)*(s*"
        "s_r-o*o_r)+(jc*kd-jd*kc)*(s_t**(2)+s*s_tt-o_t**(2)-o*o_tt)+(jd*kc-jc*kd)*(s_r**(2)+s"
        "*s_rr-o_r**(2)-o*o_rr)+(1/r)*(3*jc*kd_r+3*jc_r*kd-3*jd*kc_r-3*jd_r*kc-2*m*s_r*ja-2*m"
        "*s*ja_r)*D+(1/r)*(3*jc*kd-3*jd*kc-4*m*s*ja)*(s*s_r-o*o_r)+I*((jb*ka_t+jb_t*ka-ja*kb_"
        "t-ja_t*kb)*(s_t*o-s*o_t)+(ja*kb_r+ja_r*kb-jb*ka_r-jb_r*ka)*(s_r*o-s*o_r)+(jb*ka-ja*k"
        "b)*(s_tt*o-s*o_tt)+(ja*kb-jb*ka)*(s_rr*o-s*o_rr)+(1/r)*(ja*kb-jb*ka)*(s_r*o-s*o_r))+"
        "(jd*ka-ja*kd)*(jb*jc_t-jc*jb_t-kb*kc_t+kc*kb_t)+(jc*kb-jb*kc)*(jd*ja_t-ja*jd_t-kd*ka"
        "_t+ka*kd_t)-r*((ja*kb-jb*ka)*(jd_t*jc_r-jc_t*jd_r-kd_t*kc_r+kc_t*kd_r)+(ja*kc-jc*ka)"
        "*(jb_t*jd_r-jd_t*jb_r-kb_t*kd_r+kd_t*kb_r)+(ja*kd-jd*ka)*(jc_t*jb_r-jb_t*jc_r-kc_t*k"
        "b_r+kb_t*kc_r)+(jb*kc-jc*kb)*(jd_t*ja_r-ja_t*jd_r-kd_t*ka_r+ka_t*kd_r)+(jb*kd-jd*kb)"
        "*(ja_t*jc_r-jc_t*ja_r-ka_t*kc_r+kc_t*ka_r)+(jc*kd-jd*kc)*(jb_t*ja_r-ja_t*jb_r-kb_t*k"
        "a_r+ka_t*kb_r)))"
    ),
    "cyl_Fb": (
        "-2*(q*D**(3))**(-1)*(s*s_t-o*o_t)*((jb*kd_t+jb_t*kd-jd*kb_t-jd_t*kb-2*m*s*jc)*D+(jd*"
        "kb-jb*kd)*(s*s_t-o*o_t)+(1/r)*(ja*kd_r+ja_r*kd-jd*ka_r-jd_r*ka)*D+(1/r)*(jd*ka-ja*kd"
        ")*(s*s_r-o*o_r)+I*((jc*ka-ja*kc)*(s_t*o-s*o_t)+r*(jc*kb-jb*kc)*(s_r*o-s*o_r)))+(2*q*"
        "D**(2))**(-1)*((jb*kd_tt+2*jb_t*kd_t+jb_tt*kd-jd*kb_tt-2*jd_t*kb_t-jd_tt*kb-2*m*s_t*"
        "jc-2*m*s*jc_t)*D+(jb*kd_t+jb_t*kd-jd*kb_t-jd_t*kb-4*m*s*jc)*(s*s_t-o*o_t)+(jd*kb-jb*"
        "kd)*(s_t**(2)+s*s_tt-o_t**(2)-o*o_tt)+(1/r)*(ja*kd_tr+ja_t*kd_r+ja_r*kd_t+ja_tr*kd-j"
        "d*ka_tr-jd_t*ka_r-jd_r*ka_t-jd_tr*ka)*D+(2/r)*(ja*kd_r+ja_r*kd-jd*ka_r-jd_r*ka)*(s*s"
        "_t-o*o_t)+(1/r)*(jd*ka_t+jd_t*ka-ja*kd_t-ja_t*kd)*(s*s_r-o*o_r)+(1/r)*(jd*ka-ja*kd)*"
        "(s_t*s_r+s*s_tr-o_t*o_r-o*o_tr)+I*((jc*ka_t+jc_t*ka-ja*kc_t-ja_t*kc)*(s_t*o-s*o_t)+("
        "jc*ka-ja*kc)*(s_tt*o-s*o_tt)+r*(jc*kb_t+jc_t*kb-jb*kc_t-jb_t*kc)*(s_r*o-s*o_r)+r*(jc"
        "*kb-jb*kc)*(s_r*o_t+s_tr*o-s_t*o_r-s*o_tr))+(ja*kd-jd*ka)*(jb*jb_t+jc*jc_t-kb*kb_t-k"
        "c*kc_t)+(jb*kb+jc*kc)*(ja_t*jd-ja*jd_t+ka_t*kd-ka*kd_t)+(jb**(2)+jc**(2))*(jd_t*ka-j"
        "a_t*kd)+(kb**(2)+kc**(2))*(ja*kd_t-jd*ka_t))"
    ),
    "cyl_Fc": (
        "2*(q*D**(3))**(-1)*(s*s_t-o*o_t)*(2*(jc*ka-ja*kc-m*s*jd)*D+r*(jc*ka_r+jc_r*ka-ja*kc_"
        "r-ja_r*kc)*D+r*(ja*kc-jc*ka)*(s*s_r-o*o_r)+r**(2)*(jc*kb_t+jc_t*kb-jb*kc_t-jb_t*kc)*"
        "D+r**(2)*(jb*kc-jc*kb)*(s*s_t-o*o_t)+I*((jd*ka-ja*kd)*(s_t*o-s*o_t)+r*(jd*kb-jb*kd)*"
        "(s_r*o-s*o_r)))-(2*q*D**(2))**(-1)*(2*(jc*ka_t+jc_t*ka-ja*kc_t-ja_t*kc-m*s_t*jd-m*s*"
        "jd_t)*D+4*(jc*ka-ja*kc-m*s*jd)*(s*s_t-o*o_t)+r*(jc*ka_tr+jc_t*ka_r+jc_r*ka_t+jc_tr*k"
        "a-ja*kc_tr-ja_t*kc_r-ja_r*kc_t-ja_tr*kc)*D+2*r*(jc*ka_r+jc_r*ka-ja*kc_r-ja_r*kc)*(s*"
        "s_t-o*o_t)+r*(ja*kc_t+ja_t*kc-jc*ka_t-jc_t*ka)*(s*s_r-o*o_r)+r*(ja*kc-jc*ka)*(s_t*s_"
        "r+s*s_tr-o_t*o_r-o*o_tr)+r**(2)*(jc*kb_tt+2*jc_t*kb_t+jc_tt*kb-jb*kc_tt-2*jb_t*kc_t-"
        "jb_tt*kc)*D+r**(2)*(jc*kb_t+jc_t*kb-jb*kc_t-jb_t*kc)*(s*s_t-o*o_t)+r**(2)*(jb*kc-jc*"
        "kb)*(s_t**(2)+s*s_tt-o_t**(2)-o*o_tt)+I*((jd*ka-ja*kd)*(s_tt*o-s*o_tt)+(jd*ka_t+jd_t"
        "*ka-ja*kd_t-ja_t*kd)*(s_t*o-s*o_t)+r*(jd*kb_t+jd_t*kb-jb*kd_t-jb_t*kd)*(s_r*o-s*o_r)"
        "+r*(jd*kb-jb*kd)*(s_r*o_t+s_tr*o-s_t*o_r-s*o_tr)))"
    ),
    "cyl_Fd": (
        "-(2*q*D**(2))**(-1)*((2*jb*kd_t+2*jb_t*kd-2*jd*kb_t-2*jd_t*kb+ja*kd_rr+2*ja_r*kd_r+j"
        "a_rr*kd-jd*ka_rr-2*jd_r*ka_r-jd_rr*ka-4*m*s*jc)*D+2*(jd*kb-jb*kd)*(s*s_t-o*o_t)+(ja*"
        "kd_r+ja_r*kd-jd*ka_r-jd_r*ka)*(s*s_r-o*o_r)+(jd*ka-ja*kd)*(s_r**(2)+s*s_rr-o_r**(2)-"
        "o*o_rr)+(1/r)*(ja*kd_r+ja_r*kd-jd*ka_r-jd_r*ka)*D+(1/r)*(jd*ka-ja*kd)*(s*s_r-o*o_r)+"
        "r*(jb*kd_tr+jb_t*kd_r+jb_r*kd_t+jb_tr*kd-jd*kb_tr-jd_t*kb_r-jd_r*kb_t-jd_tr*kb-2*m*s"
        "_r*jc-2*m*s*jc_r)*D+r*(jd*kb_r+jd_r*kb-jb*kd_r-jb_r*kd)*(s*s_t-o*o_t)+2*r*(jb*kd_t+j"
        "b_t*kd-jd*kb_t-jd_t*kb-2*m*s*jc)*(s*s_r-o*o_r)+r*(jd*kb-jb*kd)*(s_t*s_r+s*s_tr-o_t*o"
        "_r-o*o_tr)+I*(2*(jc*ka-ja*kc)*(s_t*o-s*o_t)+r*(jc*ka_r+jc_r*ka-ja*kc_r-ja_r*kc)*(s_t"
        "*o-s*o_t)+3*r*(jc*kb-jb*kc)*(s_r*o-s*o_r)+r*(jc*ka-ja*kc)*(s_t*o_r+s_tr*o-s_r*o_t-s*"
        "o_tr)+r**(2)*(jc*kb-jb*kc)*(s_rr*o-s*o_rr)+r**(2)*(s_r*o-s*o_r)*(jc*kb_r+jc_r*kb-jb*"
        "kc_r-jb_r*kc))+(ja*kd-jd*ka)*(jb**(2)+jc**(2)-kb**(2)-kc**(2))-r*((ja*kb-jb*ka)*(jb*"
        "jd_r-kb*kd_r)+(ja*kc-jc*ka)*(jc*jd_r-kc*kd_r)+(jb*kd-jd*kb)*(jb*ja_r-kb*ka_r)+(jc*kd"
        "-jd*kc)*(jc*ja_r-kc*ka_r)+(jd*ka-ja*kd)*(jb*jb_r+jc*jc_r-kb*kb_r-kc*kc_r)))+2*(q*D**"
        "(3))**(-1)*(s*s_r-o*o_r)*((ja_r*kd+ja*kd_r-jd*ka_r-jd_r*ka)*D+(jd*ka-ja*kd)*(s*s_r-o"
        "*o_r)+r*(jd*kb-jb*kd)*(s*s_t-o*o_t)+r*(jb*kd_t+jb_t*kd-jd*kb_t-jd_t*kb-2*m*s*jc)*D+I"
        "*(r*(jc*ka-ja*kc)*(s_t*o-s*o_t)+r**(2)*(jc*kb-jb*kc)*(s_r*o-s*o_r)))"
    ),
    "cyl_Fe": (
        "-2*(q*D**(3))**(-1)*(s*s_r-o*o_r)*((jc*ka_r+jc_r*ka-ja*kc_r-ja_r*kc)*D+(ja*kc-jc*ka)"
        "*(s*s_r-o*o_r)+(2/r)*(jc*ka-ja*kc-m*s*jd)*D+r*(jc*kb_t+jc_t*kb-jb*kc_t-jb_t*kc)*D+r*"
        "(jb*kc-jc*kb)*(s*s_t-o*o_t)+I*((jd*kb-jb*kd)*(s_r*o-s*o_r)+(1/r)*(jd*ka-ja*kd)*(s_t*"
        "o-s*o_t)))+(2*q*D**(2))**(-1)*((2*jc*kb_t+2*jc_t*kb-2*jb*kc_t-2*jb_t*kc+jc*ka_rr+2*j"
        "c_r*ka_r+jc_rr*ka-ja*kc_rr-2*ja_r*kc_r-ja_rr*kc)*D+2*(jb*kc-jc*kb)*(s*s_t-o*o_t)+(jc"
        "*ka_r+jc_r*ka-ja*kc_r-ja_r*kc)*(s*s_r-o*o_r)+(ja*kc-jc*ka)*(s_r**(2)+s*s_rr-o_r**(2)"
        "-o*o_rr)+(1/r)*(3*jc*ka_r+3*jc_r*ka-3*ja*kc_r-3*ja_r*kc-2*m*s_r*jd-2*m*s*jd_r)*D+(1/"
        "r)*(3*jc*ka-3*ja*kc-4*m*s*jd)*(s*s_r-o*o_r)+r*(jc*kb_tr+jc_t*kb_r+jc_r*kb_t+jc_tr*kb"
        "-jb*kc_tr-jb_t*kc_r-jb_r*kc_t-jb_tr*kc)*D+r*(jb*kc_r+jb_r*kc-jc*kb_r-jc_r*kb)*(s*s_t"
        "-o*o_t)+2*r*(jc*kb_t+jc_t*kb-jb*kc_t-jb_t*kc)*(s*s_r-o*o_r)+r*(jb*kc-jc*kb)*(s_t*s_r"
        "+s*s_tr-o_t*o_r-o*o_tr)+I*((jd*kb_r+jd_r*kb-jb*kd_r-jb_r*kd)*(s_r*o-s*o_r)+(jd*kb-jb"
        "*kd)*(s_rr*o-s*o_rr)+(1/r)*(jd*ka_r+jd_r*ka-ja*kd_r-ja_r*kd)*(s_t*o-s*o_t)+(1/r)*(jd"
        "*kb-jb*kd)*(s_r*o-s*o_r)+(1/r)*(jd*ka-ja*kd)*(s_tr*o+s_t*o_r-s_r*o_t-s*o_tr)))"
    ),
    "sph_Fb": (
        "pm*(1/(2*q))*(ja**4/r**3-2*ja**2*jb**2/r+r*jb**4)*D**(-2)"
    ),
}
