#!/usr/bin/env python3
"""Walk through the QM -> MWS embedding on small codes.

The embedding replicates coordinate i of a length-n code 2^i times.  A word's
weight then becomes the sum of 2^i over its support -- the binary encoding of
the support -- so distinct supports turn into distinct weights and a
quasi-minimal code becomes a maximum-weight-spectrum code of effective length
2^n - 1.
"""

from mwscodes import (
    embed_f,
    identity_code,
    is_mws,
    is_qm,
    mws_pipeline,
    simplex,
    weight_spectrum,
)


def show(label, code):
    spec = weight_spectrum(code)
    print(f"{label}: [{code.effective_length},{code.k}]_{code.q}")
    print(f"  spectrum {dict(spec.counts)}")
    print(f"  d={spec.d} D={spec.D} L={spec.L}  QM={is_qm(code)}  MWS={is_mws(code)}")


def main():
    print("== binary identity codes are quasi-minimal ==")
    base = identity_code(2, 3)
    show("identity [3,3]_2", base)

    print("\n== embedding turns QM into MWS ==")
    show("embedded, multiplicities (1,2,4)", embed_f(base))
    print("the 7 nonzero words now carry weights 1..7, one each")

    print("\n== the same works for constant-weight simplex codes ==")
    show("simplex [4,2]_3", simplex(3, 2))
    show("embedded simplex", embed_f(simplex(3, 2)))

    print("\n== the pipeline refuses a non-QM source ==")
    try:
        mws_pipeline(3, 2, "identity")
    except Exception as exc:
        print(f"identity over GF(3) rejected: {exc}")


if __name__ == "__main__":
    main()
