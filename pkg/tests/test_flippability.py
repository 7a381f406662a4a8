import numpy as np
import pytest

from wetmark.bitmap import BinaryImage
from wetmark.flippability import compute_mask, is_flippable, window_code

# --- independent oracle: BFS flood fill over the 3x3 grid -----------------


def _oracle_components(cells, color):
    """Count 8-connected components of `color` in a 3x3 cell list (BFS)."""
    from collections import deque

    todo = {i for i in range(9) if cells[i] == color}
    count = 0
    while todo:
        count += 1
        queue = deque([todo.pop()])
        while queue:
            i = queue.popleft()
            r, c = divmod(i, 3)
            for j in list(todo):
                rj, cj = divmod(j, 3)
                if abs(rj - r) <= 1 and abs(cj - c) <= 1:
                    todo.remove(j)
                    queue.append(j)
    return count


def oracle_is_flippable(code):
    cells = [(code >> i) & 1 for i in range(9)]
    if all(c == cells[0] for c in cells):
        return False
    flipped = cells[:]
    flipped[4] ^= 1
    return (_oracle_components(cells, 1) == _oracle_components(flipped, 1)
            and _oracle_components(cells, 0) == _oracle_components(flipped, 0))


def _transform_code(code, mapping):
    cells = [(code >> i) & 1 for i in range(9)]
    return sum(cells[mapping[i]] << i for i in range(9))


def _dihedral_mappings():
    """Index mappings for the 8 symmetries of the 3x3 grid."""
    def rot(m):  # 90 degrees
        return [m[3 * (2 - (i % 3)) + i // 3] for i in range(9)]

    def mirror(m):
        return [m[3 * (i // 3) + (2 - i % 3)] for i in range(9)]

    base = list(range(9))
    maps = []
    m = base
    for _ in range(4):
        maps.append(m)
        maps.append(mirror(m))
        m = rot(m)
    return maps


def test_matches_flood_fill_oracle_on_all_512():
    for code in range(512):
        assert is_flippable(code) == oracle_is_flippable(code), code


def test_dihedral_and_inversion_invariance():
    maps = _dihedral_mappings()
    assert len({tuple(m) for m in maps}) == 8
    for code in range(512):
        value = is_flippable(code)
        for m in maps:
            assert is_flippable(_transform_code(code, m)) == value
        assert is_flippable(code ^ 0x1FF) == value


def test_specific_patterns():
    assert not is_flippable(0)            # all white
    assert not is_flippable(0x1FF)        # all black
    assert not is_flippable(1 << 4)       # isolated black center
    # vertical black stroke through center column: cells 1, 4, 7
    stroke = (1 << 1) | (1 << 4) | (1 << 7)
    assert not is_flippable(stroke)       # flip splits the stroke


def test_window_code_packing():
    assert window_code([0] * 9) == 0
    assert window_code([1] + [0] * 8) == 1
    cells = [0, 1, 0, 0, 1, 0, 0, 1, 0]
    assert window_code(cells) == (1 << 1) | (1 << 4) | (1 << 7)
    with pytest.raises(ValueError):
        window_code([0] * 8)
    with pytest.raises(ValueError):
        window_code([0] * 8 + [2])


def test_is_flippable_rejects_bad_code():
    with pytest.raises(ValueError):
        is_flippable(512)


def test_mask_uniform_image_empty():
    img = BinaryImage(8, 8, np.zeros(64, dtype=np.uint8))
    assert len(compute_mask(img)) == 0


def test_mask_3x3_only_center_possible():
    for seed in range(20):
        bits = np.random.default_rng(seed).integers(0, 2, 9).astype(np.uint8)
        mask = compute_mask(BinaryImage(3, 3, bits))
        assert set(mask.indices.tolist()) <= {4}


def test_mask_matches_per_pixel_oracle():
    for seed in range(30):
        r = np.random.default_rng(seed + 100)
        w, h = int(r.integers(3, 12)), int(r.integers(3, 12))
        bits = r.integers(0, 2, w * h).astype(np.uint8)
        img = BinaryImage(w, h, bits)
        g = img.grid()
        expected = []
        for y in range(1, h - 1):
            for x in range(1, w - 1):
                cells = g[y - 1:y + 2, x - 1:x + 2].reshape(-1).tolist()
                if oracle_is_flippable(window_code(cells)):
                    expected.append(y * w + x)
        assert compute_mask(img).indices.tolist() == expected


def test_mask_5x5_segment_case():
    g = np.zeros((5, 5), dtype=np.uint8)
    g[2, 1:4] = 1  # 3-pixel horizontal segment in the middle row
    img = BinaryImage(5, 5, g.reshape(-1))
    mask = compute_mask(img)
    expected = []
    for y in range(1, 4):
        for x in range(1, 4):
            cells = g[y - 1:y + 2, x - 1:x + 2].reshape(-1).tolist()
            if oracle_is_flippable(window_code(cells)):
                expected.append(y * 5 + x)
    assert mask.indices.tolist() == expected


def test_mask_never_contains_border():
    for seed in range(10):
        r = np.random.default_rng(seed)
        bits = r.integers(0, 2, 10 * 7).astype(np.uint8)
        mask = compute_mask(BinaryImage(10, 7, bits))
        for i in mask.indices.tolist():
            y, x = divmod(i, 10)
            assert 0 < x < 9 and 0 < y < 6


def test_mask_rejects_small_images():
    with pytest.raises(ValueError):
        compute_mask(BinaryImage(2, 5, np.zeros(10, dtype=np.uint8)))


def test_mask_to_image_roundtrip():
    img_bits = np.random.default_rng(0).integers(0, 2, 64).astype(np.uint8)
    mask = compute_mask(BinaryImage(8, 8, img_bits))
    rendered = mask.to_image()
    assert rendered.bits.sum() == len(mask)
    assert np.nonzero(rendered.bits)[0].tolist() == mask.indices.tolist()
