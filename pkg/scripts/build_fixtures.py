#!/usr/bin/env python3
"""Regenerate the fixture corpus and the scripted-provider playbook.

The corpus mirrors a contested quantum-optimization case: one vendor paper
claiming a runtime advantage, four same-group supporting papers, three
independent rebuttals, two independent benchmarks, an evaluation framework,
and the structured relation records (officers, finances, press, citations,
dependencies) the signal layer consumes.

Run from the repository root:  python3 scripts/build_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "fixtures" / "corpus"
REPLAY = ROOT / "fixtures" / "replay"

KIPU = "Kipu Quantum GmbH"
AUTHORS_S1 = [
    ("Enrique Solano", KIPU), ("Priya Raman", KIPU), ("Daniel Kovacs", KIPU),
    ("Mei-Lin Zhao", KIPU), ("Tomás Herrera", KIPU), ("Anna Lindgren", KIPU),
]
AUTHORS_S2 = [a for a in AUTHORS_S1 if a[0] != "Tomás Herrera"]
AUTHORS_S4 = [
    ("Priya Raman", KIPU), ("Daniel Kovacs", KIPU), ("Mei-Lin Zhao", KIPU),
    ("Tomás Herrera", KIPU), ("Victor Osei", "IBM Research"),
]
AUTHORS_S5 = [
    ("Enrique Solano", KIPU), ("Priya Raman", KIPU), ("Anna Lindgren", KIPU),
    ("Mei-Lin Zhao", KIPU),
]


def doc(slug, source_type, title, authors, date, venue, citations, sections,
        assets=None, disclosures=None):
    return {
        "manifest_kind": "document",
        "slug": slug,
        "source_type": source_type,
        "title": title,
        "metadata": {
            "authors": [{"name": n, "affiliation": a} for n, a in authors],
            "publication_date": date,
            "venue": venue,
            "citation_count": citations,
            "external_ids": {"slug": slug},
            "disclosures": disclosures or [],
        },
        "sections": [{"heading": h, "level": 1, "passages": ps}
                     for h, ps in sections],
        "assets": assets or [],
    }


DOCUMENTS = [
    doc("s1-target", "paper",
        "Runtime Advantage of Bias-Field Counterdiabatic Optimization on "
        "156-Qubit Processors",
        AUTHORS_S1, "2025-05-16", "arXiv", 12,
        [
            ("Abstract", [
                "We report runtime quantum advantage on higher-order "
                "unconstrained binary optimization problems, achieving "
                "runtime quantum advantage over simulated annealing and "
                "CPLEX with the bias-field digitized counterdiabatic "
                "algorithm BF-DCQO.",
                "We expect improvements of several orders of magnitude as "
                "hardware matures.",
                "Experiments on 156-qubit IBM Heron processors demonstrate "
                "faster time-to-solution on the hardest instances.",
            ]),
            ("Introduction", [
                "Higher-order unconstrained binary optimization (HUBO) "
                "generalizes quadratic formulations with higher-order "
                "coupling terms and is a demanding benchmark class for both "
                "quantum and classical solvers [b1-hubo-instances].",
            ]),
            ("Hybrid algorithm and methods", [
                "BF-DCQO applies bias-field counterdiabatic driving to steer "
                "the quantum evolution, building on digitized "
                "counterdiabatic protocols introduced in our earlier work.",
                "The workflow requires classical simulated annealing "
                "pre-processing to seed the bias field and classical "
                "post-processing refinement of raw samples, as illustrated "
                "in the workflow diagram.",
                "Simulated annealing provides the warm start; a "
                "zero-temperature sweep refines the measured bitstrings.",
            ]),
            ("Hardware experiments", [
                "All circuits were executed on the 156-qubit IBM Heron "
                "processors ibm_marrakesh and ibm_kingston with heavy-hex "
                "connectivity.",
                "Runtime is measured as T_CPU plus T_QPU; transpilation of "
                "roughly 2 s, readout, and queuing are excluded from the "
                "reported figures.",
                "We benchmark against simulated annealing with a fixed "
                "sweep schedule and single-thread CPLEX on the hardest "
                "instance out of a pool of 250.",
            ]),
            ("Results", [
                "Total reported runtime spans 0.2-2.2 s across instances, "
                "versus a T_sweep formula estimate of 30 s for simulated "
                "annealing with initialization of roughly 1.65 s and solver "
                "setup excluded.",
                "BF-DCQO outperforms simulated annealing by more than 3.5x "
                "and CPLEX by up to a factor of 80 in time-to-result on "
                "selected instances.",
                "The median enhancement across the instance pool is 5-7x.",
                "Solution quality on the hardest HUBO instances improves "
                "with bias-field iterations.",
            ]),
            ("Conclusion", [
                "These results establish runtime quantum advantage for "
                "industrial-scale optimization problems, with speedups up "
                "to a factor of 80.",
                "BF-DCQO was developed at Kipu Quantum and scales to "
                "156-qubit problems, attributing its performance to quantum "
                "counterdiabatic evolution.",
            ]),
        ],
        assets=[{
            "kind": "diagram",
            "caption": "Hybrid workflow of BF-DCQO: classical simulated "
                       "annealing pre-processing, quantum counterdiabatic "
                       "evolution, and classical post-processing refinement.",
            "inline_refs": [[2, 1]],
            "section": 2,
        }]),

    doc("s2-algorithm-intro", "paper",
        "Bias-Field Digitized Counterdiabatic Optimization for Higher-Order "
        "Binary Problems",
        AUTHORS_S2, "2024-08-20", "arXiv", 31,
        [
            ("Abstract", [
                "Kipu Quantum introduces BF-DCQO, a bias-field digitized "
                "counterdiabatic algorithm for HUBO problems.",
            ]),
            ("Methods", [
                "Bias-field counterdiabatic circuits reduce circuit depth "
                "relative to standard digitized adiabatic schedules.",
                "The quantum contribution has not been isolated from the "
                "classical refinement loop in these experiments.",
            ]),
            ("Simulation results", [
                "We observe simulated speedups over simulated annealing on "
                "synthetic HUBO instances.",
                "Performance is attributed to quantum bias-field evolution, "
                "pending hardware validation.",
            ]),
        ]),

    doc("s3-reframing", "paper",
        "Hybrid Sequential Quantum Computing for Combinatorial Optimization",
        AUTHORS_S1, "2025-10-10", "arXiv", 4,
        [
            ("Abstract", [
                "We present BF-DCQO as a hybrid sequential quantum computing "
                "workflow interleaving classical and quantum stages.",
            ]),
            ("Methods", [
                "The workflow combines simulated annealing stages with "
                "digitized counterdiabatic evolution.",
                "All circuits were executed on IBM Heron processors as in "
                "the original study.",
            ]),
            ("Results", [
                "Performance remains at the runtime quantum-advantage level "
                "reported previously.",
                "The runtime quantum advantage of BF-DCQO was demonstrated "
                "in our earlier work [s1-target].",
            ]),
        ]),

    doc("s4-cross-solver-benchmark", "paper",
        "QUEST: A Cross-Solver Benchmark of Hybrid Quantum Optimization",
        AUTHORS_S4, "2026-03-05", "arXiv", 2,
        [
            ("Abstract", [
                "We benchmark BF-DCQO against enhanced classical solvers on "
                "the QUEST suite.",
            ]),
            ("Benchmark methods", [
                "Enhanced parallel tempering and GPU-accelerated solvers are "
                "configured with tuned schedules.",
                "The exact implementation of the algorithm is proprietary to "
                "Kipu Quantum.",
            ]),
            ("Results", [
                "Optimized classical solvers reach or surpass the hybrid "
                "workflow on time-to-solution.",
                "Earlier reported speedups are tied to runtime accounting "
                "exclusions on the quantum side.",
                "BF-DCQO remains a competitive approximate heuristic for "
                "dense HUBO instances.",
            ]),
        ]),

    doc("s5-counterdiabatic-protocols", "paper",
        "Digitized Counterdiabatic Protocols for Spin-Glass Optimization",
        AUTHORS_S5, "2024-03-12", "journal", 58,
        [
            ("Abstract", [
                "Counterdiabatic driving accelerates convergence on selected "
                "HUBO instances in simulation.",
            ]),
            ("Analysis", [
                "The protocols require careful schedule tuning to remain "
                "stable at larger depths.",
                "We conjecture the approach generalizes to arbitrary spin "
                "models.",
            ]),
        ]),

    doc("r1-wallclock-rebuttal", "rebuttal",
        "End-to-End Wall-Clock Evaluation of a Claimed Runtime Quantum "
        "Advantage",
        [("Jonas Berglund", "Polar Computing Institute"),
         ("Aino Korhonen", "Polar Computing Institute"),
         ("Marta Nowak", "Polar Computing Institute")],
        "2025-10-06", "arXiv", 9,
        [
            ("Abstract", [
                "We re-evaluate the reported runtime quantum advantage of "
                "BF-DCQO under end-to-end wall-clock timing and find no "
                "advantage.",
            ]),
            ("Evaluation methods", [
                "We time the full pipeline including transpilation, readout, "
                "and queuing, and we average over the full instance pool "
                "rather than selecting instances.",
                "The simulated bifurcation machine and an optimized "
                "simulated annealing configuration serve as baselines.",
            ]),
            ("Results and analysis", [
                "Under end-to-end timing BF-DCQO shows 9.8 s wall-clock per "
                "instance, and no runtime advantage remains.",
                "We confirm execution on IBM Heron hardware; the QPU runs "
                "are genuine and not disputed.",
                "Wall-clock varies with queue load between runs.",
                "The claimed gap reappears only when hardest-instance "
                "selection reproduces the original protocol.",
                "Once the transpilation overhead excluded by the original "
                "study is included, the speedup disappears, indicating the "
                "reported advantage is a measurement accounting artifact.",
                "Averaged over the full instance pool, the median "
                "enhancement inverts to a classical win.",
                "The simulated bifurcation machine completes every instance "
                "faster than the hybrid workflow.",
                "Taken together the results indicate incremental progress "
                "in hybrid heuristics rather than a quantum breakthrough.",
            ]),
        ]),

    doc("r2-bfnull-control", "rebuttal",
        "BF-Null: A Classical Control Experiment for Bias-Field Quantum "
        "Optimization",
        [("Claire Fontaine", "Annealex Corp"),
         ("Rohit Menon", "Annealex Corp")],
        "2025-11-20", "arXiv", 6,
        [
            ("Abstract", [
                "We replace the quantum stage of BF-DCQO with a trivial "
                "classical sweep, BF-NULL, and obtain comparable solution "
                "quality.",
            ]),
            ("Control design", [
                "BF-NULL keeps the simulated annealing pre-processing and "
                "post-processing stages and substitutes the QPU circuit "
                "with a classical bias update.",
                "Our open-source control implementation is available for "
                "independent replication.",
            ]),
            ("Findings", [
                "BF-NULL matches the hybrid pipeline on solution quality "
                "across the instance suite, indicating BF-DCQO retains its "
                "performance without QPU execution.",
                "In a full-pipeline wall-clock comparison no runtime "
                "advantage remains for the quantum variant.",
                "The performance is driven by the classical refinement "
                "loop.",
                "The control cannot rule out small quantum contributions on "
                "larger instances.",
            ]),
        ]),

    doc("r3-transparency-critique", "rebuttal",
        "On the Verifiability of Recent Hybrid Quantum Optimization Claims",
        [("Sofia Ricci", "Open Benchmarks Collective"),
         ("James Okafor", "Open Benchmarks Collective")],
        "2025-12-15", "preprint", 3,
        [
            ("Abstract", [
                "We examine the verifiability of the BF-DCQO runtime "
                "advantage claims.",
            ]),
            ("Findings", [
                "There is no public implementation and no instance data for "
                "BF-DCQO, preventing direct replication.",
                "The target study carries no competing interests section "
                "despite commercial ties.",
                "Independent replication is warranted before the advantage "
                "claims are accepted.",
            ]),
        ]),

    doc("b1-hubo-instances", "benchmark",
        "A Benchmark Suite of Higher-Order Binary Optimization Instances",
        [("Lena Fischer", "Federal Institute for Applied Mathematics"),
         ("Ibrahim Diallo", "Federal Institute for Applied Mathematics")],
        "2024-11-02", "journal", 44,
        [
            ("Overview", [
                "HUBO generalizes quadratic binary optimization with "
                "higher-order coupling terms of order three and above.",
                "The suite spans dense and sparse higher-order coupling "
                "structures at 50 to 300 variables.",
            ]),
        ]),

    doc("b2-classical-solvers", "benchmark",
        "Classical Metaheuristics on Dense Higher-Order Instances: A "
        "Reference Study",
        [("Yuki Tanaka", "Metaheuristics Research Group")],
        "2025-07-30", "journal", 17,
        [
            ("Results", [
                "Optimized simulated annealing solves 156-variable HUBO "
                "instances within seconds on commodity hardware.",
            ]),
        ]),

    doc("e1-keystone-criteria", "evaluation-framework",
        "Keystone Criteria for Credible Quantum Advantage Claims",
        [("Harold Zheng", "Center for Computational Assessment"),
         ("Nadia Petrova", "Center for Computational Assessment")],
        "2025-09-01", "journal", 28,
        [
            ("Overview", [
                "We propose five keystone properties that a credible "
                "quantum advantage claim should satisfy.",
            ]),
            ("Keystone criteria", [
                "Predictability: the advantage is forecast by a validated "
                "performance model before deployment.",
                "Typicality: the advantage holds across representative "
                "instance distributions rather than selected cases; for "
                "algorithms such as BF-DCQO this requires instance-averaged "
                "evaluation.",
                "Robustness: the advantage survives stronger classical "
                "baselines and ablation controls.",
                "Verifiability: code, data, and experimental records are "
                "open to independent replication.",
                "Usefulness: the advantage transfers to a problem of "
                "practical value.",
            ]),
        ]),
]


RELATIONS = {
    "manifest_kind": "relations",
    "records": [
        # officers, products, stakes
        {"subject": "Enrique Solano", "subject_kind": "researcher",
         "relation": "co-founded", "object": "Kipu Quantum",
         "object_kind": "organization", "source": "registry"},
        {"subject": "Kipu Quantum", "subject_kind": "organization",
         "relation": "sells", "object": "Iskay Quantum Optimizer",
         "object_kind": "product", "source": "registry"},
        {"subject": "Iskay Quantum Optimizer", "subject_kind": "product",
         "relation": "implements", "object": "BF-DCQO",
         "object_kind": "algorithm", "source": "registry"},
        {"subject": "IBM", "subject_kind": "organization",
         "relation": "provides", "object": "IBM Heron",
         "object_kind": "hardware", "source": "registry"},
        {"subject": "IBM", "subject_kind": "organization",
         "relation": "owns", "object": "CPLEX",
         "object_kind": "product", "source": "registry"},
        {"subject": "IBM", "subject_kind": "organization",
         "relation": "hosts", "object": "Iskay Quantum Optimizer",
         "object_kind": "product", "source": "press:marketplace"},
        {"subject": "IBM", "subject_kind": "organization",
         "relation": "co-authored", "object": "QUEST cross-solver benchmark",
         "object_kind": "other", "source": "doc:s4-cross-solver-benchmark"},
        {"subject": "QUEST cross-solver benchmark", "subject_kind": "other",
         "relation": "evaluates", "object": "BF-DCQO",
         "object_kind": "algorithm", "source": "doc:s4-cross-solver-benchmark"},
        {"subject": "Annealex Corp", "subject_kind": "organization",
         "relation": "competes-with", "object": "Kipu Quantum",
         "object_kind": "organization", "source": "registry"},
        {"subject": "Polar Computing Institute", "subject_kind": "organization",
         "relation": "evaluates", "object": "BF-DCQO",
         "object_kind": "algorithm", "source": "doc:r1-wallclock-rebuttal"},
        {"subject": "Open Benchmarks Collective", "subject_kind": "organization",
         "relation": "evaluates", "object": "BF-DCQO",
         "object_kind": "algorithm", "source": "doc:r3-transparency-critique"},
        # supply-chain dependencies
        {"subject": "BF-DCQO", "subject_kind": "algorithm",
         "relation": "requires", "object": "IBM Heron",
         "object_kind": "hardware", "source": "doc:s1-target"},
        {"subject": "IBM Heron", "subject_kind": "hardware",
         "relation": "topology", "object": "heavy-hex lattice",
         "object_kind": "hardware", "source": "doc:s1-target"},
        {"subject": "heavy-hex lattice", "subject_kind": "hardware",
         "relation": "manufactured-by", "object": "IBM",
         "object_kind": "organization", "source": "registry"},
        # financial events
        {"subject": "Kipu Quantum", "subject_kind": "organization",
         "relation": "raised-funding", "object": "seed round",
         "date": "2022-09-15",
         "amount": {"value": 10000000.0, "currency": "EUR"},
         "description": "disclosed seed funding round",
         "source": "press:funding"},
        {"subject": "Kipu Quantum", "subject_kind": "organization",
         "relation": "raised-funding", "object": "seed extension",
         "date": "2023-06-20",
         "amount": {"value": 3500000.0, "currency": "EUR"},
         "description": "seed extension round",
         "source": "press:funding"},
        {"subject": "Kipu Quantum", "subject_kind": "organization",
         "relation": "acquired", "object": "Anaqor quantum platform",
         "date": "2024-12-03",
         "amount": {"value": 2000000.0, "currency": "EUR"},
         "description": "software platform acquisition",
         "source": "press:acquisition"},
        {"subject": "Kipu Quantum", "subject_kind": "organization",
         "relation": "spent-on", "object": "cloud QPU access",
         "date": "2025-01-15",
         "amount": {"value": 600000.0, "currency": "EUR"},
         "description": "cloud access fees for hosted QPU time",
         "source": "filing:annual"},
        {"subject": "Kipu Quantum", "subject_kind": "organization",
         "relation": "spent-on", "object": "research personnel",
         "date": "2025-02-10",
         "amount": {"value": 1200000.0, "currency": "EUR"},
         "description": "research personnel expansion",
         "source": "filing:annual"},
        # strategic events
        {"subject": "Kipu Quantum", "subject_kind": "organization",
         "relation": "launched", "object": "Iskay Quantum Optimizer",
         "object_kind": "product", "date": "2025-03-17",
         "description": "product listed on the hardware vendor marketplace",
         "source": "press:marketplace"},
        {"subject": "Kipu Quantum", "subject_kind": "organization",
         "relation": "reframed-position", "object": "BF-DCQO",
         "object_kind": "algorithm", "date": "2025-10-10",
         "description": "runtime advantage language softened to hybrid "
                        "sequential quantum computing",
         "source": "doc:s3-reframing"},
        # citation graph
        {"subject": "doc:s1-target", "relation": "cites",
         "object": "doc:s2-algorithm-intro"},
        {"subject": "doc:s1-target", "relation": "cites",
         "object": "doc:s5-counterdiabatic-protocols"},
        {"subject": "doc:s1-target", "relation": "cites",
         "object": "doc:b1-hubo-instances"},
        {"subject": "doc:s2-algorithm-intro", "relation": "cites",
         "object": "doc:s5-counterdiabatic-protocols"},
        {"subject": "doc:s3-reframing", "relation": "cites",
         "object": "doc:s1-target"},
        {"subject": "doc:s3-reframing", "relation": "cites",
         "object": "doc:s5-counterdiabatic-protocols"},
        {"subject": "doc:s4-cross-solver-benchmark", "relation": "cites",
         "object": "doc:s1-target"},
        {"subject": "doc:s4-cross-solver-benchmark", "relation": "cites",
         "object": "doc:r1-wallclock-rebuttal"},
        {"subject": "doc:s4-cross-solver-benchmark", "relation": "cites",
         "object": "doc:s2-algorithm-intro"},
        {"subject": "doc:r1-wallclock-rebuttal", "relation": "cites",
         "object": "doc:s1-target"},
        {"subject": "doc:r2-bfnull-control", "relation": "cites",
         "object": "doc:s1-target"},
        {"subject": "doc:r3-transparency-critique", "relation": "cites",
         "object": "doc:s1-target"},
        {"subject": "doc:r3-transparency-critique", "relation": "cites",
         "object": "doc:r1-wallclock-rebuttal"},
        {"subject": "doc:b2-classical-solvers", "relation": "cites",
         "object": "doc:b1-hubo-instances"},
    ],
}


# --- scripted playbook ---------------------------------------------------------

S1_ENTITIES = [
    ("BF-DCQO", "algorithm",
     ["bias-field digitized counterdiabatic quantum optimization"]),
    ("Kipu Quantum", "organization", ["Kipu Quantum GmbH"]),
    ("IBM", "organization", []),
    ("IBM Heron", "hardware", ["Heron"]),
    ("ibm_marrakesh", "hardware", []),
    ("ibm_kingston", "hardware", []),
    ("heavy-hex lattice", "hardware", ["heavy-hex connectivity"]),
    ("HUBO", "dataset", ["higher-order unconstrained binary optimization"]),
    ("QUBO", "dataset", []),
    ("Simulated Annealing", "algorithm", ["SA"]),
    ("CPLEX", "product", []),
    ("Enrique Solano", "researcher", []),
    ("counterdiabatic driving", "algorithm", []),
    ("time-to-solution", "metric-concept", []),
    ("runtime quantum advantage", "metric-concept", []),
    ("transpilation overhead", "metric-concept", []),
    ("wall-clock time", "metric-concept", []),
]


def entity_rows(rows):
    return {"entities": [{"name": n, "kind": k, "aliases": a}
                         for n, k, a in rows]}


def claim(subject, predicate, obj, entity, passages, metric=None,
          methodology=None, included=None, excluded=None, cites=None):
    row = {"subject": subject, "predicate": predicate, "object": obj,
           "object_is_entity": entity, "passages": passages}
    if metric:
        row["metric_text"] = metric
    if methodology:
        row["methodology"] = methodology
    if included:
        row["included_overheads"] = included
    if excluded:
        row["excluded_overheads"] = excluded
    if cites:
        row["cited_refs"] = cites
    return row


QUANTUM_INCLUDED = ["T_CPU pre- and post-processing", "T_QPU gate execution"]
QUANTUM_EXCLUDED = [
    {"name": "transpilation", "magnitude": "2 s"},
    {"name": "readout", "magnitude": None},
    {"name": "queuing", "magnitude": None},
]
CLASSICAL_INCLUDED = ["T_sweep computation"]
CLASSICAL_EXCLUDED = [
    {"name": "initialization", "magnitude": "1.65 s"},
    {"name": "solver setup", "magnitude": None},
]
WALLCLOCK_INCLUDED = ["T_CPU pre- and post-processing",
                      "T_QPU gate execution", "transpilation", "readout",
                      "queuing"]

S1_CLAIMS = [
    # c01
    claim("BF-DCQO", "executed-on", "IBM Heron", True, [[3, 0]]),
    # c02
    claim("BF-DCQO", "outperforms-time-to-result",
          "SA (>3.5x) / CPLEX (up to 80x)", False, [[4, 1], [3, 2]],
          metric="up to a factor of 80",
          methodology="time-to-result on selected instances",
          included=QUANTUM_INCLUDED, excluded=QUANTUM_EXCLUDED),
    # c03
    claim("BF-DCQO", "projected-to-achieve", "several orders of magnitude",
          False, [[0, 1]]),
    # c04
    claim("BF-DCQO", "requires", "classical SA pre- and post-processing",
          False, [[2, 1]]),
    # c05
    claim("BF-DCQO", "achieves", "runtime quantum advantage", True, [[0, 0]]),
    # c06
    claim("BF-DCQO", "solves",
          "industrial-scale optimization problems (up to 80x)", False,
          [[5, 0]]),
    # c07
    claim("BF-DCQO", "uses", "counterdiabatic driving", True, [[2, 0]]),
    # c08
    claim("BF-DCQO", "implemented-on-qubits", "156", False, [[3, 0]],
          metric="156 qubits"),
    # c09
    claim("BF-DCQO", "benchmarked-against", "Simulated Annealing", True,
          [[3, 2]]),
    # c10
    claim("BF-DCQO", "warm-started-by", "Simulated Annealing", True,
          [[2, 2]]),
    # c11
    claim("BF-DCQO", "improves-solution-quality-on", "HUBO", True,
          [[4, 3], [3, 2]]),
    # c12
    claim("BF-DCQO", "scales-to", "156-qubit problems", False,
          [[5, 1], [3, 2]]),
    # c13
    claim("BF-DCQO", "achieves-runtime", "0.2-2.2 s", False,
          [[4, 0], [3, 1]], metric="0.2-2.2 s",
          methodology="T_CPU plus T_QPU, partial accounting",
          included=QUANTUM_INCLUDED, excluded=QUANTUM_EXCLUDED),
    # c14
    claim("BF-DCQO", "outperforms", "CPLEX", True, [[3, 2], [4, 1]]),
    # c15
    claim("BF-DCQO", "achieves-median-enhancement", "5-7x", False,
          [[4, 2], [4, 1]], metric="5-7x",
          methodology="median across instance pool"),
    # c16
    claim("BF-DCQO", "attributes-performance-to",
          "quantum counterdiabatic evolution", False, [[5, 1], [2, 1]]),
    # c17
    claim("counterdiabatic driving", "accelerates",
          "convergence to low-energy states", False, [[2, 0], [2, 2]]),
    # c18
    claim("BF-DCQO", "developed-by", "Kipu Quantum", True, [[5, 1]]),
    # c19
    claim("Simulated Annealing", "requires-runtime",
          "30 s by T_sweep formula", False, [[4, 0]], metric="30 s",
          methodology="T_sweep formula estimate",
          included=CLASSICAL_INCLUDED, excluded=CLASSICAL_EXCLUDED),
    # c20
    claim("HUBO", "generalizes", "QUBO", True, [[1, 0]],
          cites=["doc:b1-hubo-instances"]),
]

S2_CLAIMS = [
    claim("BF-DCQO", "introduced-by", "Kipu Quantum", True, [[0, 0]]),
    claim("BF-DCQO", "achieves-speedup-over", "Simulated Annealing", True,
          [[2, 0], [1, 1]]),
    claim("BF-DCQO", "attributes-performance-to",
          "quantum bias-field evolution", False, [[2, 1], [1, 1]]),
    claim("BF-DCQO", "reduces-circuit-depth-via", "counterdiabatic driving",
          True, [[1, 0]]),
]

S3_CLAIMS = [
    claim("BF-DCQO", "operates-as", "hybrid sequential quantum computing "
          "workflow", False, [[0, 0]]),
    claim("BF-DCQO", "combines", "Simulated Annealing", True, [[1, 0]]),
    claim("BF-DCQO", "maintains-performance-at",
          "runtime quantum-advantage level", False, [[2, 0]]),
    claim("BF-DCQO", "executed-on", "IBM Heron", True, [[1, 1]]),
    claim("BF-DCQO", "previously-demonstrated", "runtime quantum advantage",
          True, [[2, 1]], cites=["doc:s1-target"]),
]

S4_CLAIMS = [
    claim("Simulated Annealing", "reaches-or-surpasses", "BF-DCQO", True,
          [[2, 0]]),
    claim("BF-DCQO", "speedup-tied-to", "runtime accounting exclusions",
          False, [[2, 1]]),
    claim("BF-DCQO", "remains", "competitive approximate heuristic", False,
          [[2, 2]]),
    claim("Iskay Quantum Optimizer", "is",
          "proprietary implementation of BF-DCQO", False, [[1, 1]]),
]

S5_CLAIMS = [
    claim("counterdiabatic driving", "speeds-convergence-on",
          "selected HUBO instances", False, [[0, 0]]),
    claim("counterdiabatic driving", "requires", "careful schedule tuning",
          False, [[1, 0]]),
    claim("counterdiabatic driving", "generalizes-to",
          "arbitrary spin models", False, [[1, 1]]),
]

R1_CLAIMS = [
    claim("BF-DCQO", "shows-runtime", "9.8 s end-to-end wall-clock", False,
          [[2, 0], [2, 2]], metric="9.8 s",
          methodology="end-to-end wall-clock",
          included=WALLCLOCK_INCLUDED, excluded=[]),
    claim("BF-DCQO", "speedup-explained-by", "excluded transpilation "
          "overhead", False, [[2, 4]]),
    claim("BF-DCQO", "constitutes", "incremental heuristic progress", False,
          [[2, 7]]),
    claim("Simulated Bifurcation Machine", "outperforms", "BF-DCQO", True,
          [[2, 6]]),
    claim("BF-DCQO", "loses-advantage-under", "instance-averaged evaluation",
          False, [[2, 5], [2, 3]]),
    claim("BF-DCQO", "executed-on", "IBM Heron", True, [[2, 1]]),
]

R2_CLAIMS = [
    claim("BF-DCQO", "retains-performance-without",
          "QPU execution (BF-NULL control)", False, [[2, 0]]),
    claim("BF-DCQO", "shows-no-advantage-in",
          "full-pipeline wall-clock comparison", False, [[2, 1]]),
    claim("BF-DCQO", "speedup-explained-by", "classical refinement loop",
          False, [[2, 2], [2, 3]]),
    claim("BF-NULL", "is", "reproducible open implementation", False,
          [[1, 1]]),
]

R3_CLAIMS = [
    claim("BF-DCQO", "lacks", "public implementation or instance data",
          False, [[1, 0]]),
    claim("Kipu Quantum", "discloses", "no competing interests", False,
          [[1, 1]]),
    claim("BF-DCQO", "warrants", "independent replication", False, [[1, 2]]),
]

B1_CLAIMS = [
    claim("HUBO", "generalizes", "QUBO", True, [[0, 0]]),
    claim("HUBO", "exhibits", "higher-order coupling terms", False, [[0, 1]]),
]

B2_CLAIMS = [
    claim("Simulated Annealing", "solves",
          "156-variable HUBO within seconds", False, [[0, 0]]),
]


def k(slug, subject, predicate):
    return f"{slug}:{subject}|{predicate}"


# claim keys used across playbook sections
C01 = k("s1-target", "BF-DCQO", "executed-on")
C02 = k("s1-target", "BF-DCQO", "outperforms-time-to-result")
C05 = k("s1-target", "BF-DCQO", "achieves")
C13 = k("s1-target", "BF-DCQO", "achieves-runtime")
C15 = k("s1-target", "BF-DCQO", "achieves-median-enhancement")
C16 = k("s1-target", "BF-DCQO", "attributes-performance-to")
C20 = k("s1-target", "HUBO", "generalizes")
S2C2 = k("s2-algorithm-intro", "BF-DCQO", "achieves-speedup-over")
S2C3 = k("s2-algorithm-intro", "BF-DCQO", "attributes-performance-to")
S3C3 = k("s3-reframing", "BF-DCQO", "maintains-performance-at")
S3C4 = k("s3-reframing", "BF-DCQO", "executed-on")
S3C5 = k("s3-reframing", "BF-DCQO", "previously-demonstrated")
S4C1 = k("s4-cross-solver-benchmark", "Simulated Annealing",
         "reaches-or-surpasses")
S4C2 = k("s4-cross-solver-benchmark", "BF-DCQO", "speedup-tied-to")
S4C3 = k("s4-cross-solver-benchmark", "BF-DCQO", "remains")
R1C1 = k("r1-wallclock-rebuttal", "BF-DCQO", "shows-runtime")
R1C2 = k("r1-wallclock-rebuttal", "BF-DCQO", "speedup-explained-by")
R1C3 = k("r1-wallclock-rebuttal", "BF-DCQO", "constitutes")
R1C4 = k("r1-wallclock-rebuttal", "Simulated Bifurcation Machine",
         "outperforms")
R1C5 = k("r1-wallclock-rebuttal", "BF-DCQO", "loses-advantage-under")
R1C6 = k("r1-wallclock-rebuttal", "BF-DCQO", "executed-on")
R2C1 = k("r2-bfnull-control", "BF-DCQO", "retains-performance-without")
R2C2 = k("r2-bfnull-control", "BF-DCQO", "shows-no-advantage-in")
R2C3 = k("r2-bfnull-control", "BF-DCQO", "speedup-explained-by")
B1C1 = k("b1-hubo-instances", "HUBO", "generalizes")


def pair(a, b):
    return " & ".join(sorted((a, b)))


def align(relation, stance, rationale):
    return {"relation": relation, "stance": stance, "rationale": rationale}


ALIGN_RULES = {
    pair(C05, S2C2): align("matched", "agrees",
                           "both assert a speedup over simulated annealing"),
    pair(C05, S3C5): align("matched", "agrees",
                           "restates the original advantage claim"),
    pair(C05, S3C3): align("partially-overlapping", "agrees",
                           "softened phrasing of the advantage claim"),
    pair(C05, R1C1): align("matched", "disagrees",
                           "wall-clock timing finds no advantage"),
    pair(C05, R1C2): align("matched", "disagrees",
                           "attributes the gap to accounting, not computation"),
    pair(C05, R2C2): align("matched", "disagrees",
                           "full-pipeline comparison shows no advantage"),
    pair(C05, S4C1): align("matched", "disagrees",
                           "stronger classical baselines close the gap"),
    pair(C13, R1C1): align("matched", "disagrees",
                           "same runtime measured under different accounting"),
    pair(C02, R1C4): align("matched", "disagrees",
                           "a stronger baseline outperforms the hybrid"),
    pair(C02, S4C1): align("matched", "disagrees",
                           "optimized solvers reach or surpass it"),
    pair(C15, R1C5): align("matched", "disagrees",
                           "instance averaging reverses the median claim"),
    pair(C15, R1C3): align("matched", "agrees",
                           "a modest median gain is incremental progress"),
    pair(C16, S2C3): align("matched", "agrees",
                           "both credit the quantum stage"),
    pair(C16, R2C1): align("matched", "disagrees",
                           "classical control matches without the QPU"),
    pair(C01, S3C4): align("matched", "agrees",
                           "same hardware execution statement"),
    pair(C01, R1C6): align("matched", "agrees",
                           "execution on the named hardware is confirmed"),
    pair(R1C2, S4C2): align("matched", "agrees",
                            "both tie the speedup to accounting exclusions"),
    pair(R1C2, R2C3): align("matched", "agrees",
                            "both locate the cause in classical stages"),
    pair(R1C3, S4C3): align("matched", "agrees",
                            "both describe competitive incremental progress"),
    pair(C20, B1C1): align("matched", "agrees",
                           "same definitional statement"),
    "*": align("unrelated", "not-applicable", "no shared proposition"),
}

ROOT_CAUSE_RULES = {
    pair(C05, R1C1): {
        "category": "runtime-definition-mismatch",
        "explanation": "end-to-end wall-clock timing eliminates the "
                       "reported gap"},
    pair(C05, R1C2): {
        "category": "methodological-difference",
        "explanation": "speedup attributed to accounting exclusions rather "
                       "than computation"},
    pair(C05, R2C2): {
        "category": "methodological-difference",
        "explanation": "a classical control matches solution quality over "
                       "the full pipeline"},
    pair(C05, S4C1): {
        "category": "baseline-selection",
        "explanation": "stronger classical solvers reach or surpass the "
                       "hybrid workflow"},
    pair(C02, R1C4): {
        "category": "baseline-selection",
        "explanation": "the simulated bifurcation machine outperforms on "
                       "the same instances"},
    pair(C02, S4C1): {
        "category": "baseline-selection",
        "explanation": "tuned parallel tempering and GPU solvers close the "
                       "gap"},
    pair(C15, R1C5): {
        "category": "statistical-sampling",
        "explanation": "instance-averaged evaluation reverses the median "
                       "enhancement"},
    pair(C16, R2C1): {
        "category": "methodological-difference",
        "explanation": "removing the QPU stage leaves solution quality "
                       "unchanged"},
    "*": {"category": "other",
          "explanation": "disagreement cause not determined"},
}

FIDELITY_RULES = {
    f"{C20} -> b1-hubo-instances": {
        "faithful": True, "distortion_note": None},
    f"{S3C5} -> s1-target": {
        "faithful": False,
        "distortion_note": "restates the advantage without the "
                           "selected-instances qualifier present in the "
                           "cited work"},
    "*": {"faithful": True, "distortion_note": None},
}


def nli(claim_key, contains, label, rationale=""):
    return {"claim": claim_key, "passage_contains": contains, "label": label,
            "rationale": rationale}


NLI_RULES = [
    # s1 supports
    nli(C01, "ibm_marrakesh", "supports", "names the hardware backends"),
    nli(C01, "faster time-to-solution", "supports",
        "abstract reports hardware runs"),
    nli(k("s1-target", "BF-DCQO", "requires"), "post-processing refinement",
        "supports", "workflow stages stated"),
    nli(k("s1-target", "BF-DCQO", "uses"), "digitized counterdiabatic "
        "protocols", "supports", ""),
    nli(k("s1-target", "BF-DCQO", "implemented-on-qubits"),
        "156-qubit ibm heron", "supports", ""),
    nli(k("s1-target", "BF-DCQO", "benchmarked-against"),
        "fixed sweep schedule", "supports", ""),
    nli(k("s1-target", "BF-DCQO", "warm-started-by"), "warm start",
        "supports", ""),
    # s1 partials: one supporting and one conflicting passage each
    nli(C02, "up to a factor of 80 in time-to-result", "supports", ""),
    nli(C02, "single-thread cplex on the hardest instance", "contradicts",
        "restricted baseline undermines the general comparison"),
    nli(k("s1-target", "BF-DCQO", "improves-solution-quality-on"),
        "improves with bias-field iterations", "supports", ""),
    nli(k("s1-target", "BF-DCQO", "improves-solution-quality-on"),
        "hardest instance out of a pool", "contradicts",
        "quality shown on selected instances only"),
    nli(k("s1-target", "BF-DCQO", "scales-to"), "scales to 156-qubit",
        "supports", ""),
    nli(k("s1-target", "BF-DCQO", "scales-to"),
        "hardest instance out of a pool", "contradicts",
        "scaling shown on selected instances only"),
    nli(C13, "runtime spans 0.2-2.2 s", "supports", ""),
    nli(C13, "transpilation of roughly 2 s", "contradicts",
        "excluded overhead is comparable to the reported total"),
    nli(k("s1-target", "BF-DCQO", "outperforms"),
        "up to a factor of 80 in time-to-result", "supports", ""),
    nli(k("s1-target", "BF-DCQO", "outperforms"),
        "single-thread cplex on the hardest instance", "contradicts",
        "single-thread configuration weakens the baseline"),
    nli(C15, "median enhancement across the instance pool", "supports", ""),
    nli(C15, "up to a factor of 80 in time-to-result", "contradicts",
        "headline outlier is inconsistent with the median"),
    nli(C16, "attributing its performance to quantum", "supports", ""),
    nli(C16, "requires classical simulated annealing pre-processing",
        "contradicts", "classical stages are load-bearing"),
    nli(k("s1-target", "counterdiabatic driving", "accelerates"),
        "bias-field counterdiabatic driving to steer", "supports", ""),
    nli(k("s1-target", "counterdiabatic driving", "accelerates"),
        "zero-temperature sweep refines", "contradicts",
        "refinement is classical"),
    # s2
    nli(k("s2-algorithm-intro", "BF-DCQO", "introduced-by"),
        "kipu quantum introduces bf-dcqo", "supports", ""),
    nli(k("s2-algorithm-intro", "BF-DCQO", "reduces-circuit-depth-via"),
        "reduce circuit depth", "supports", ""),
    nli(S2C2, "simulated speedups over simulated annealing", "supports", ""),
    nli(S2C2, "not been isolated", "contradicts",
        "speedup source not attributed"),
    nli(S2C3, "attributed to quantum bias-field", "supports", ""),
    nli(S2C3, "not been isolated", "contradicts", ""),
    # s3
    nli(k("s3-reframing", "BF-DCQO", "operates-as"),
        "hybrid sequential quantum computing workflow", "supports", ""),
    nli(k("s3-reframing", "BF-DCQO", "combines"),
        "combines simulated annealing", "supports", ""),
    nli(S3C3, "runtime quantum-advantage level", "supports", ""),
    nli(S3C4, "executed on ibm heron", "supports", ""),
    # s4
    nli(S4C1, "reach or surpass", "supports", ""),
    nli(S4C2, "accounting exclusions", "supports", ""),
    nli(S4C3, "competitive approximate heuristic", "supports", ""),
    # s5
    nli(k("s5-counterdiabatic-protocols", "counterdiabatic driving",
          "speeds-convergence-on"), "accelerates convergence on selected",
        "supports", ""),
    nli(k("s5-counterdiabatic-protocols", "counterdiabatic driving",
          "requires"), "careful schedule tuning", "supports", ""),
    # r1
    nli(R1C1, "9.8 s wall-clock", "supports", ""),
    nli(R1C1, "varies with queue load", "contradicts",
        "wall-clock figure is load-dependent"),
    nli(R1C2, "transpilation overhead excluded by the original study",
        "supports", ""),
    nli(R1C3, "incremental progress", "supports", ""),
    nli(R1C4, "simulated bifurcation machine completes", "supports", ""),
    nli(R1C5, "averaged over the full instance pool", "supports", ""),
    nli(R1C5, "hardest-instance selection reproduces", "contradicts",
        "original gap returns under the original protocol"),
    nli(R1C6, "confirm execution on ibm heron", "supports", ""),
    # r2
    nli(R2C1, "matches the hybrid pipeline", "supports", ""),
    nli(R2C2, "no runtime advantage remains", "supports", ""),
    nli(R2C3, "driven by the classical refinement loop", "supports", ""),
    nli(R2C3, "cannot rule out small quantum contributions", "contradicts",
        "control has a stated limit"),
    nli(k("r2-bfnull-control", "BF-NULL", "is"),
        "open-source control implementation", "supports", ""),
    # r3
    nli(k("r3-transparency-critique", "BF-DCQO", "lacks"),
        "no public implementation", "supports", ""),
    nli(k("r3-transparency-critique", "Kipu Quantum", "discloses"),
        "no competing interests section", "supports", ""),
    # b1 / b2
    nli(B1C1, "generalizes quadratic", "supports", ""),
    nli(k("b1-hubo-instances", "HUBO", "exhibits"), "higher-order coupling",
        "supports", ""),
    nli(k("b2-classical-solvers", "Simulated Annealing", "solves"),
        "within seconds", "supports", ""),
]


PROVENANCE = {
    C01: 1, C02: 1,
    k("s1-target", "BF-DCQO", "projected-to-achieve"): 5,
    k("s1-target", "BF-DCQO", "requires"): 1,
    C05: 1,
    k("s1-target", "BF-DCQO", "solves"): 5,
    k("s1-target", "BF-DCQO", "uses"): 3,
    k("s1-target", "BF-DCQO", "implemented-on-qubits"): 1,
    k("s1-target", "BF-DCQO", "benchmarked-against"): 1,
    k("s1-target", "BF-DCQO", "warm-started-by"): 1,
    k("s1-target", "BF-DCQO", "improves-solution-quality-on"): 1,
    k("s1-target", "BF-DCQO", "scales-to"): 1,
    C13: 1,
    k("s1-target", "BF-DCQO", "outperforms"): 1,
    C15: 1, C16: 1,
    k("s1-target", "counterdiabatic driving", "accelerates"): 3,
    k("s1-target", "BF-DCQO", "developed-by"): 5,
    k("s1-target", "Simulated Annealing", "requires-runtime"): 1,
    C20: 4,
    k("s2-algorithm-intro", "BF-DCQO", "introduced-by"): 5,
    S2C2: 2, S2C3: 2,
    k("s2-algorithm-intro", "BF-DCQO", "reduces-circuit-depth-via"): 2,
    k("s3-reframing", "BF-DCQO", "operates-as"): 1,
    k("s3-reframing", "BF-DCQO", "combines"): 1,
    S3C3: 5, S3C4: 1, S3C5: 4,
    S4C1: 1, S4C2: 1, S4C3: 1,
    k("s4-cross-solver-benchmark", "Iskay Quantum Optimizer", "is"): 5,
    k("s5-counterdiabatic-protocols", "counterdiabatic driving",
      "speeds-convergence-on"): 2,
    k("s5-counterdiabatic-protocols", "counterdiabatic driving",
      "requires"): 3,
    k("s5-counterdiabatic-protocols", "counterdiabatic driving",
      "generalizes-to"): 5,
    R1C1: 1, R1C2: 3, R1C3: 3, R1C4: 1, R1C5: 1, R1C6: 1,
    R2C1: 1, R2C2: 1, R2C3: 2,
    k("r2-bfnull-control", "BF-NULL", "is"): 5,
    k("r3-transparency-critique", "BF-DCQO", "lacks"): 1,
    k("r3-transparency-critique", "Kipu Quantum", "discloses"): 1,
    k("r3-transparency-critique", "BF-DCQO", "warrants"): 5,
    B1C1: 3,
    k("b1-hubo-instances", "HUBO", "exhibits"): 3,
    k("b2-classical-solvers", "Simulated Annealing", "solves"): 1,
}


PLAYBOOK = {
    "extract-entities": {
        "s1-target": entity_rows(S1_ENTITIES),
        "s2-algorithm-intro": entity_rows([
            ("BF-DCQO", "algorithm", []),
            ("Kipu Quantum", "organization", []),
            ("HUBO", "dataset", []),
            ("Simulated Annealing", "algorithm", []),
            ("counterdiabatic driving", "algorithm", []),
        ]),
        "s3-reframing": entity_rows([
            ("BF-DCQO", "algorithm", []),
            ("IBM Heron", "hardware", []),
            ("Simulated Annealing", "algorithm", []),
            ("runtime quantum advantage", "metric-concept", []),
        ]),
        "s4-cross-solver-benchmark": entity_rows([
            ("BF-DCQO", "algorithm", []),
            ("Simulated Annealing", "algorithm", []),
            ("Iskay Quantum Optimizer", "product", []),
            ("Kipu Quantum", "organization", []),
        ]),
        "s5-counterdiabatic-protocols": entity_rows([
            ("counterdiabatic driving", "algorithm", []),
            ("HUBO", "dataset", []),
        ]),
        "r1-wallclock-rebuttal": entity_rows([
            ("BF-DCQO", "algorithm", []),
            ("IBM Heron", "hardware", []),
            ("Simulated Bifurcation Machine", "algorithm", []),
            ("Simulated Annealing", "algorithm", []),
            ("wall-clock time", "metric-concept", []),
        ]),
        "r2-bfnull-control": entity_rows([
            ("BF-DCQO", "algorithm", []),
            ("BF-NULL", "algorithm", []),
            ("Simulated Annealing", "algorithm", []),
        ]),
        "r3-transparency-critique": entity_rows([
            ("BF-DCQO", "algorithm", []),
            ("Kipu Quantum", "organization", []),
        ]),
        "b1-hubo-instances": entity_rows([
            ("HUBO", "dataset", []),
            ("QUBO", "dataset", []),
        ]),
        "b2-classical-solvers": entity_rows([
            ("Simulated Annealing", "algorithm", []),
            ("HUBO", "dataset", []),
        ]),
        "e1-keystone-criteria": entity_rows([]),
    },
    "extract-claims": {
        "s1-target": {"claims": S1_CLAIMS},
        "s2-algorithm-intro": {"claims": S2_CLAIMS},
        "s3-reframing": {"claims": S3_CLAIMS},
        "s4-cross-solver-benchmark": {"claims": S4_CLAIMS},
        "s5-counterdiabatic-protocols": {"claims": S5_CLAIMS},
        "r1-wallclock-rebuttal": {"claims": R1_CLAIMS},
        "r2-bfnull-control": {"claims": R2_CLAIMS},
        "r3-transparency-critique": {"claims": R3_CLAIMS},
        "b1-hubo-instances": {"claims": B1_CLAIMS},
        "b2-classical-solvers": {"claims": B2_CLAIMS},
        "e1-keystone-criteria": {"claims": []},
    },
    "classify-provenance": {key: {"level": lvl}
                            for key, lvl in PROVENANCE.items()},
    "nli-verdict": {
        "rules": NLI_RULES,
        "default": {"label": "neutral", "rationale": "no bearing"},
    },
    "coherence": {
        "s1-target": {"flags": [
            {"dimension": "baseline-fairness", "severity": "moderate",
             "note": "CPLEX restricted to a single CPU thread; simulated "
                     "annealing pinned to a fixed sweep schedule"},
            {"dimension": "reproducibility", "severity": "severe",
             "note": "implementation is proprietary; no code or instance "
                     "data released"},
            {"dimension": "scope-consistency", "severity": "moderate",
             "note": "methods hedge with hardest-instance language while "
                     "abstract and conclusion state a general advantage"},
        ]},
    },
    "overclaim": {
        "s1-target": {"annotations": [
            {"subject": "BF-DCQO", "predicate": "achieves",
             "issue": "overgeneralization", "severity": "moderate",
             "claim_text": "achieving runtime quantum advantage (Abstract)",
             "evidence_text": "demonstrated only on the hardest instance "
                              "out of a pool of 250 (Hardware experiments)"},
            {"subject": "BF-DCQO", "predicate": "solves",
             "issue": "extreme-value-reporting", "severity": "moderate",
             "claim_text": "speedups up to a factor of 80 (Conclusion)",
             "evidence_text": "single maximum outlier; median enhancement "
                              "5-7x across instances (Results)"},
            {"subject": "BF-DCQO", "predicate": "projected-to-achieve",
             "issue": "projection-as-result", "severity": "severe",
             "claim_text": "several orders of magnitude (Abstract)",
             "evidence_text": "prefaced with 'we expect'; no supporting "
                              "data or analysis in the body"},
            {"subject": "BF-DCQO", "predicate": "solves",
             "issue": "scope-inflation", "severity": "severe",
             "claim_text": "industrial-scale optimization problems "
                           "(Conclusion)",
             "evidence_text": "only synthetic HUBO tested at N<=156; no "
                              "industrial problem formulated"},
        ]},
    },
    "align-claims": ALIGN_RULES,
    "citation-fidelity": FIDELITY_RULES,
    "root-cause": ROOT_CAUSE_RULES,
    "rubric": {
        "e1-keystone-criteria:BF-DCQO": {"criteria": [
            {"name": "Predictability", "met": "partial",
             "note": "no validated forecast model; projection language only"},
            {"name": "Typicality", "met": "no",
             "note": "hardest-instance selection; advantage reverses under "
                     "instance averaging"},
            {"name": "Robustness", "met": "no",
             "note": "advantage vanishes against the simulated bifurcation "
                     "machine and the BF-NULL control"},
            {"name": "Verifiability", "met": "partial",
             "note": "proprietary implementation; no instance data released"},
            {"name": "Usefulness", "met": "partial",
             "note": "synthetic HUBO only; no industrial problem "
                     "demonstrated"},
        ]},
    },
    "describe-asset": {
        "s1-target:Hybrid workflow of BF-DCQO: classical": {
            "description": "Diagram of the hybrid BF-DCQO pipeline showing "
                           "a classical simulated annealing pre-processing "
                           "stage, quantum circuit execution on heavy-hex "
                           "hardware, and a classical zero-temperature "
                           "post-processing refinement stage.",
            "trends": ["classical stages bracket the quantum stage"],
        },
    },
    "hypothesize": {
        C05: {
            "statement": "The reported runtime quantum advantage is genuine",
            "conclusions": {
                "analyst-a": ["advantage-genuine"],
                "analyst-b": ["measurement-artifact"],
                "analyst-c": ["baseline-artifact"],
            },
        },
        C16: {
            "statement": "The quantum processor contributes materially to "
                         "end-to-end performance",
            "conclusions": {
                "analyst-a": ["qpu-essential"],
                "analyst-b": ["classical-sufficient"],
                "analyst-c": ["classical-sufficient"],
            },
        },
        R1C2: {
            "statement": "The claimed advantage is a measurement artifact "
                         "of runtime accounting",
            "conclusions": {
                "analyst-a": ["measurement-artifact"],
                "analyst-b": ["measurement-artifact"],
                "analyst-c": ["measurement-artifact"],
            },
        },
        R1C3: {
            "statement": "The work represents real but incremental "
                         "optimization progress",
            "conclusions": {
                "analyst-a": ["incremental-progress"],
                "analyst-b": ["incremental-progress"],
                "analyst-c": ["incremental-progress"],
            },
        },
    },
    "counter-hypothesize": {
        C05: {"statement": "The reported advantage is a measurement "
                           "artifact of excluded overheads"},
        C16: {"statement": "Classical iteration alone suffices to reach "
                           "the same solution quality"},
        R1C2: {"statement": "Hybrid accounting conventions differ "
                            "legitimately between platforms"},
        R1C3: {"statement": "Next-generation hardware upscaling changes "
                            "the conclusion"},
    },
}


def main() -> None:
    CORPUS.mkdir(parents=True, exist_ok=True)
    REPLAY.mkdir(parents=True, exist_ok=True)
    for document in DOCUMENTS:
        path = CORPUS / f"{document['slug']}.json"
        path.write_text(json.dumps(document, indent=2, ensure_ascii=False)
                        + "\n", encoding="utf-8")
    (CORPUS / "relations.json").write_text(
        json.dumps(RELATIONS, indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8")
    (REPLAY / "playbook.json").write_text(
        json.dumps(PLAYBOOK, indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8")
    print(f"wrote {len(DOCUMENTS)} documents, "
          f"{len(RELATIONS['records'])} relation records, playbook")


if __name__ == "__main__":
    main()
