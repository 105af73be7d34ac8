"""Walkthrough: why Voronoi decompositions need the finiteness of balls.

Two weighted trees illustrate the failure mode.  In each, a distinguished
vertex keeps getting closer to later and later centers, so in the infinite
limit no center is nearest and no decomposition with those centers exists.
On every finite truncation a decomposition does exist, but the apex's cell
migrates outward as the truncation grows: existence is genuinely a
finite-ball phenomenon, not an artifact of the construction.
"""

from specbounds import apex_ray, build_voronoi, compute_metric, geometric_comb

print("=== Ray with an apex: distances d(apex, ray vertex n) = 1 + 1/n ===")
for N in (3, 5, 9, 15):
    g = apex_ray(N)
    centers = tuple(f"{n},0" for n in range(1, N + 1))
    vd = build_voronoi(g, centers)
    md = compute_metric(g)
    owner = vd.cell_of("1,1")
    print(
        f"  truncation N={N:3d}: apex joins the cell of {owner:6s} "
        f"at distance {md.d(owner, '1,1'):.6f}"
    )
print("the owning center is always the last ray vertex; it escapes to")
print("infinity with N, so the infinite graph admits no decomposition.")

print("\n=== Comb with geometric weights: d((n,0) -> (1,1)) = 2/3 + 4^(1-n)/3 ===")
for N in (3, 5, 9, 15):
    g = geometric_comb(N)
    centers = tuple(f"{n},0" for n in range(1, N + 1))  # the leaves
    vd = build_voronoi(g, centers)
    md = compute_metric(g)
    owner = vd.cell_of("1,1")
    print(
        f"  truncation N={N:3d}: spine start joins the cell of {owner:6s} "
        f"at distance {md.d(owner, '1,1'):.9f}"
    )
print("each leaf is closer than the one before (limit 2/3), so again no")
print("leaf is nearest in the infinite limit.  Vertex degree stays <= 3 here:")
print("bounded geometry in the combinatorial sense is not enough.")
