#!/usr/bin/env python3
"""Replay a serialized non-radical witness and re-run its verification.

Feed it the JSON produced by ``radsup witness ... --json``.  Everything is
rebuilt from the record alone: the ring, the term order, the generators,
and the witness monomial; the two normal-form checks are recomputed from
scratch and compared against the recorded outcome.
"""

import argparse
import json
import sys

from radsup.polyring import (
    buchberger,
    normal_form,
    order_from_json,
    parse_polynomial,
    ring_from_json,
)


def replay(record: dict) -> bool:
    witness = record["payload"]["witness"] if "payload" in record else record
    ring = ring_from_json(witness["ring"])
    order = order_from_json(ring, witness["order"])
    generators = [parse_polynomial(ring, text) for text in witness["generators"]]
    w = parse_polynomial(ring, witness["witness_monomial"])
    basis = buchberger(generators, order)
    nf_w = normal_form(w, basis)
    nf_square = normal_form(w * w, basis)
    outside = not nf_w.is_zero()
    inside = nf_square.is_zero()
    print(f"ring: {ring.to_json()}")
    print(f"witness monomial: {witness['witness_monomial']}")
    print(f"normal form of w: {nf_w.to_string(order)} (outside ideal: {outside})")
    print(f"normal form of w^2: {nf_square.to_string(order)} (inside ideal: {inside})")
    recorded = witness["verification"]
    agrees = (
        outside == recorded["witness_outside_ideal"]
        and inside == recorded["square_inside_ideal"]
        and nf_w.to_string(order) == recorded["normal_form_witness"]
    )
    print(f"matches recorded verification: {agrees}")
    return outside and inside and agrees


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("file", nargs="?", help="witness JSON (default: stdin)")
    args = parser.parse_args()
    if args.file:
        with open(args.file, "r", encoding="utf-8") as handle:
            record = json.load(handle)
    else:
        record = json.load(sys.stdin)
    sys.exit(0 if replay(record) else 1)


if __name__ == "__main__":
    main()
