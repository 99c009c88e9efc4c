"""The 2-blocks of S_9: cores, weights, heights and the bounds they satisfy."""

from psingular import blocks_symmetric, check_block_bounds

for b in blocks_symmetric(9, 2):
    r = check_block_bounds(b)
    print(f"core {b.core}  weight {b.weight}  members {len(b.members)}")
    print("  ", r.to_json())
