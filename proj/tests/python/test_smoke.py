import pentatile


def test_heptiamond_census():
    assert pentatile.enumerate_heptiamonds(7) == 24
    assert pentatile.enumerate_heptiamonds(1) == 1


def test_count_and_first():
    assert pentatile.count_tilings(7, 0, 1, 1) == 14
    assert pentatile.count_tilings(1, 0, 0, 7) == 0
    text = pentatile.first_tiling(7, 0, 1, 1)
    assert text is not None
    assert pentatile.verify(text) == []
    assert pentatile.first_tiling(1, 0, 0, 7) is None


def test_presets_round_trip():
    for name in pentatile.preset_names():
        text = pentatile.preset(name)
        assert pentatile.canonical(text) == text
        assert pentatile.verify(text) == []


def test_stats():
    s = pentatile.stats(pentatile.preset("rice1995-like"))
    assert s["ship_a"] + s["ship_p"] == 6
    assert s["windmill_a"] + s["windmill_p"] == 0
    assert s["domain_wedges"] == 126


def test_flips():
    flower = pentatile.preset("flower-lattice")
    regions = pentatile.find_cn(flower)
    assert regions, "flower boundaries should expose convex nonagons"
    flipped = pentatile.flip_cn(flower, 0)
    assert pentatile.verify(flipped) == []

    walk = pentatile.flip_walk(flower, steps=4, seed=1)
    assert len(walk) == 5
    assert len(set(walk)) == 5


def test_render():
    svg = pentatile.render_svg(pentatile.preset("windmill-min"), color_by="kind")
    assert svg.startswith("<?xml")
    assert "<polygon" in svg


def test_pattern_index():
    index = pentatile.cn_pattern_index(2)
    assert index.splitlines()[0].startswith("P1 ")
