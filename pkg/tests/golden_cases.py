"""CLI invocations pinned by golden JSON reports (the ``elapsed`` field is dropped)."""

CASES = {
    "star_check_jump": ["check-jump", "--input", "instances/star.json", "--mode", "edge"],
    "star_enumerate_vertex": ["enumerate", "--input", "instances/star.json", "--mode", "vertex"],
    "star_member_odd": ["member", "--input", "instances/star.json",
                        "--demand", '{"a":1,"b":0,"c":0}'],
    "star_member_both": ["member", "--input", "instances/star.json",
                         "--demand", '{"a":1,"b":1,"c":0}', "--via", "both"],
    "star_polytope_member": ["polytope", "member", "--input", "instances/star.json",
                             "--partition", "singletons", "--point", "[1,1,1]"],
    "star_polytope_vertices": ["polytope", "vertices", "--input", "instances/star.json"],
    "star_polytope_rows": ["polytope", "rows", "--input", "instances/star.json"],
    "star_relaxed_half": ["polytope", "relaxed", "--input", "instances/star.json",
                          "--point", '["1/2","1/2","1"]'],
    "star_max_packing": ["max-packing", "--input", "instances/star.json", "--mode", "vertex"],
    "star_exchange_reroute": ["exchange", "--input", "instances/star.json", "--m1", "[1,1,0]",
                              "--m2", "[0,1,1]", "--step", "+c", "--constructive"],
    "triangle_enumerate": ["enumerate", "--input", "instances/triangle.json"],
    "triangle_greedy": ["greedy", "--input", "instances/triangle.json",
                        "--weights", '{"a":2,"b":-1,"c":0}'],
    "triangle_exchange": ["exchange", "--input", "instances/triangle.json", "--m1", "[2,2,2]",
                          "--m2", "[0,0,0]", "--step", "-a"],
    "triangle_intersect": ["intersect", "--input", "instances/triangle.json",
                           "--t1", "singletons", "--t2", "ab|c"],
    "triangle_parity": ["parity-check", "--input", "instances/triangle.json"],
    "triangle_bisubmodular": ["polytope", "bisubmodular", "--input", "instances/triangle.json",
                              "--partition", "ab|c"],
    "triangle_support": ["polytope", "support", "--input", "instances/triangle.json",
                         "--A", '["a","b"]', "--B", '["c"]'],
}
