"""Fixture corpora and random-corpus generators shared by the test suite.

The ``gem`` and ``psed`` builders reproduce two published reference-count
distributions: a fixed list of most-cited documents plus synthetic filler
documents so the totals (citing articles, reference instances, distinct
documents) come out exactly. Three page-only entries in the psed list
collide under volume+page-dominant keying, so they carry an explicit
volume here to keep every listed document a distinct key.
"""

from __future__ import annotations

from functools import lru_cache
import random

from cocite.records import ArticleRecord, Corpus

GEM_ARTICLES = 86
GEM_TOTAL_REFS = 4908
GEM_DISTINCT_DOCS = 3347
GEM_MIN_CITATIONS = 5
GEM_SELECTED_DOCS = 118
GEM_COVERED_REFS = 979

PSED_ARTICLES = 34
PSED_TOTAL_REFS = 1974
PSED_DISTINCT_DOCS = 1515
PSED_MIN_CITATIONS = 3
PSED_SELECTED_DOCS = 92
PSED_COVERED_REFS = 417

GEM_TOP = (
    (46, "Reynolds P, 2005, V24, P205, Small Bus Econ"),
    (26, "Wennekers S, 2005, V24, P293, Small Bus Econ"),
    (19, "Davidsson P, 2003, V18, P301, J Bus Venturing"),
    (18, "Arenius P, 2005, V24, P233, Small Bus Econ"),
    (18, "Wennekers S, 1999, V13, P27, Small Bus Econ"),
    (18, "Shane S, 2000, V25, P217, Acad Manage Rev"),
    (17, "North D, 1990, I I Change Ec Perfor"),
    (17, "Reynolds P, 2002, Global Entrepreneurs"),
    (15, "Carree M, 2002, V19, P271, Small Bus Econ"),
    (15, "Sternberg R, 2005, V24, P193, Small Bus Econ"),
    (14, "Baumol W, 1990, V98, P893, J Polit Econ"),
    (14, "Schumpeter J, 1934, Theory Ec Dev"),
    (13, "Bosma N, 2008, Global Entrepreneurs"),
    (13, "Acs Z, 2005, Global Entrepreneurs"),
    (13, "Wong P, 2005, V24, P335, Small Bus Econ"),
    (12, "Minniti M, 2006, Global Entrepreneurs"),
    (12, "Krueger N, 2000, V15, P411, J Bus Venturing"),
    (11, "Van Stel A, 2007, V28, P171, Small Bus Econ"),
    (11, "Ardichvili A, 2003, V18, P105, J Bus Venturing"),
    (11, "Ajzen I, 1991, V50, P179, Organ Behav Hum Dec"),
    (10, "Storey D, 1994, Understanding Small"),
    (10, "Delmar F, 2000, V12, P1, Entrep Region Dev"),
    (10, "Levesque M, 2006, V21, P177, J Bus Venturing"),
    (10, "Arenius P, 2005, V24, P249, Small Bus Econ"),
    (10, "Parker S, 2004, Ec Self Employment E"),
    (10, "Van Stel A, 2005, V24, P311, Small Bus Econ"),
    (10, "Baumol William J, 2002, Free Market Innovati"),
    (10, "Reynolds P, 1994, V28, P443, Reg Stud"),
    (10, "Bygrave W, 2003, V5, P101, Venture Capital Int"),
    (9, "Kirzner I, 1973, Competition Entrep"),
    (9, "Verheul I, 2006, V18, P151, Entrep Region Dev"),
    (9, "Shapero A, 1982, P72, Ency Entrepreneurshi"),
    (9, "Hofstede G, 2001, Cultures Consequence"),
    (9, "Reynolds P, 2001, Global Entrepreneurs"),
    (9, "Reynolds P, 2003, Global Entrepreneurs"),
    (9, "Bosma N, 2009, Global Entrepreneurs"),
    (9, "Minniti M, 2005, Global Entrepreneurs"),
    (9, "Reynolds P, 1999, Global Entrepreneurs"),
    (9, "Audretsch D, 2001, V10, P267, Ind Corp Change"),
    (8, "McClelland D, 1961, Achieving Soc"),
    (8, "Blau D, 1987, V95, P445, J Polit Econ"),
    (8, "Acs Z, 2008, V31, P305, Small Bus Econ"),
    (8, "North D, 2005, P1, Princ Econ Hist W Wo"),
    (8, "Busenitz L, 2000, V43, P994, Acad Manage J"),
    (8, "Klapper L, 2006, V82, P591, J Financ Econ"),
    (8, "North D, 1994, V84, P359, Am Econ Rev"),
    (8, "Grilo I, 2006, V26, P305, Small Bus Econ"),
    (8, "Bosma N, 2010, Global Entrepreneurs"),
    (7, "Uhlaner L, 2007, V17, P161, J Evol Econ"),
    (7, "Audretsch D, 2002, Entrepreneurship Det"),
    (7, "Robinson P, 1994, V9, P141, J Bus Venturing"),
    (7, "Carree M, 2007, V19, P281, Entrep Region Dev"),
    (7, "Levie J, 2008, V31, P235, Small Bus Econ"),
    (7, "Cooper A, 1987, V11, P11, Am J Small Business"),
    (7, "Hayton J, 2002, V26, P33, Entrep Theory Pract"),
    (7, "Porter M, 2002, P16, Global Competitivene"),
    (7, "Davidsson P, 2006, V2, Foundations And Trends In Entrepreneurship"),
    (7, "Hofstede G, 1980, Cultures Consequence"),
    (7, "Grilo I, 2005, V1, P441, Int Entrepreneurship"),
    (7, "Shane S, 2000, V11, P448, Organ Sci"),
    (6, "Etzioni A, 1987, V8, P175, J Econ Behav Organ"),
    (6, "Evans D, 1989, V79, P519, Am Econ Rev"),
    (6, "Audretsch D, 2002, V36, P113, Reg Stud"),
    (6, "Armington C, 2002, V36, P33, Reg Stud"),
    (6, "Amoros J, 2008, V4, P381, Int Entrepreneurship"),
    (6, "Kirzner I, 1997, V35, P60, J Econ Lit"),
    (6, "Aidis R, 2008, V23, P656, J Bus Venturing"),
    (6, "Kolvereid L, 1996, V21, P47, Entrep Theory Pract"),
    (6, "Reynolds P, 2004, Global Entrepreneurs"),
    (6, "Blanchflower D, 2001, V45, P680, Eur Econ Rev"),
    (6, "Carree M, 2003, P437, Hdb Entrepreneurship"),
    (6, "Djankov S, 2002, V117, P1, Q J Econ"),
    (6, "Schumpeter J, 1942, Capitalism Socialism"),
    (6, "Acs Z, 2007, V28, P109, Small Bus Econ"),
    (6, "Acs Z, 2005, V24, P323, Small Bus Econ"),
    (6, "Noorderhaven N, 2004, V28, P447, Entrep Theory Pract"),
    (6, "Davidsson P, 1995, V7, P41, Entrep Region Dev"),
    (6, "Davidsson P, 1991, V6, P405, J Bus Venturing"),
    (6, "Casson M, 1982, Entrepreneur Ec Theo"),
    (6, "Gartner W, 1985, V10, P696, Acad Manage Rev"),
    (5, "Scherer R, 1991, V3, P195, Entrep Region Dev"),
    (5, "Mueller S, 2000, V16, P51, J Business Venturing"),
    (5, "Mueller S, 2001, V16, P51, J Bus Venturing"),
    (5, "Wennekers S, 2007, V17, P133, J Evol Econ"),
    (5, "Chen C, 1998, V13, P295, J Bus Venturing"),
    (5, "Koellinger P, 2008, V31, P21, Small Bus Econ"),
    (5, "Shane S, 2003, Gen Theory Entrepren"),
    (5, "Hair J, 1998, Multivariate Data An"),
    (5, "Knight F, 1921, Risk Uncertainty Pro"),
    (5, "Reynolds P, 1997, V9, P449, Small Bus Econ"),
    (5, "Harper D, 2003, Fdn Entrepreneurship"),
    (5, "Porter M, 1990, Competitive Advantag"),
    (5, "Davidsson P, 1997, V18, P179, J Econ Psychol"),
    (5, "Audretsch D, 2004, V38, P949, Reg Stud"),
    (5, "Lucas R, 1978, V9, P508, Bell J Econ"),
    (5, "Audretsch D, 2000, V10, P17, J Evol Econ"),
    (5, "Johnson S, 2002, V92, P1335, Am Econ Rev"),
    (5, "Verheul I, 2002, P11, Entrepreneurship Det"),
    (5, "Lumpkin G, 1996, V21, P135, Acad Manage Rev"),
    (5, "Rocha H, 2005, V24, P267, Small Bus Econ"),
    (5, "Wagner J, 2004, V38, P219, Ann Regional Sci"),
    (5, "Freytag A, 2007, V17, P117, J Evol Econ"),
    (5, "De Carolis D, 2006, V30, P41, Entrep Theory Pract"),
    (5, "De Clercq D, 2006, V24, P339, Int Small Bus J"),
    (5, "Gimeno J, 1997, V42, P750, Admin Sci Quart"),
    (5, "Kirzner I, 1979, Perception Opportuni"),
    (5, "Tiessen J, 1997, V12, P367, J Bus Venturing"),
    (5, "Desoto H, 1989, Other Path Invisible"),
    (5, "Becker G, 1964, Human Capital"),
    (5, "Blanchflower D, 2000, V7, P471, Labour Econ"),
    (5, "Bergmann H, 2007, V28, P205, Small Bus Econ"),
    (5, "Acs Z, 2006, Geography, And American Economic Growth, P1, Entrepreneurship"),
    (5, "Krueger N, 2000, V24, P5, Entrep Theory Pract"),
    (5, "Krueger N, 1994, V19, P91, Entrep Theory Pract"),
    (5, "Acs Z, 2007, V28, P123, Small Bus Econ"),
    (5, "Evans D, 1989, V97, P808, J Polit Econ"),
    (5, "Levie J, 2007, V28, P143, Small Bus Econ"),
    (5, "Feldman M, 2001, V10, P861, Ind Corp Change"),
)

PSED_TOP = (
    (18, "Gartner W, 2004, Hdb Entrepreneurial"),
    (11, "Carter N, 2003, V18, P13, J Bus Venturing"),
    (11, "Delmar F, 2003, V24, P1165, Strategic Manage J"),
    (10, "Shane S, 2000, V25, P217, Acad Manage Rev"),
    (10, "Reynolds P, 1997, Entrepreneurial Proc"),
    (8, "Cooper A, 1994, V9, P371, J Bus Venturing"),
    (8, "Delmar F, 2004, V19, P385, J Bus Venturing"),
    (8, "Davidsson P, 2003, V18, P301, J Bus Venturing"),
    (8, "Katz J, 1988, V13, P429, Acad Manage Rev"),
    (7, "Aldrich H, 1999, Org Evolving"),
    (7, "Carter N, 1996, V11, P151, J Bus Venturing"),
    (7, "Reynolds P, 2000, V4, P153, Adv Entrepreneurship"),
    (6, "Gatewood E, 1995, V10, P371, J Bus Venturing"),
    (6, "Vroom V, 1964, Work Motivation"),
    (6, "Baker T, 2005, V50, P329, Admin Sci Quart"),
    (6, "Gartner W, 1985, V10, P696, Acad Manage Rev"),
    (6, "Evans D, 1989, V79, P519, Am Econ Rev"),
    (6, "Parker S, 2006, V27, P81, Small Bus Econ"),
    (6, "Shaver K, 1991, V16, P23, Entrep Theorie Data An"),
    (6, "Reynolds P, 2004, V23, P263, Small Bus Econ"),
    (6, "Kirchhoff Bruce A, 1994, Entrepreneurship Dyn"),
    (5, "Kim P, 2006, V27, P5, Small Bus Econ"),
    (5, "Aldrich H, 2001, V25, P41, Entrep Theory Pract"),
    (5, "Krueger N, 2000, V15, P411, J Bus Venturing"),
    (5, "Knight F, 1921, Risk Uncertainty Pro"),
    (5, "Reynolds P, 1992, V7, P405, J Bus Venturing"),
    (5, "Gartner W, 2004, V1, P285, Hdb Entrepreneurial"),
    (5, "Bruderl J, 1992, V57, P227, Am Sociol Rev"),
    (5, "Gimeno J, 1997, V42, P750, Admin Sci Quart"),
    (4, "Reynolds P, 2007, V3, Foundations And Trends In Entrepreneurship"),
    (4, "Blanchflower D, 1998, V16, P26, J Labor Econ"),
    (4, "Delmar F, 2003, V18, P189, J Bus Venturing"),
    (4, "Bosma N, 2004, V23, P227, Small Bus Econ"),
    (4, "Suchman M, 1995, V20, P571, Acad Manage Rev"),
    (4, "Sarasvathy S, 2001, V26, P243, Acad Manage Rev"),
    (4, "Kirzner I, 1997, V35, P60, J Econ Lit"),
    (4, "Schumpeter J, 1934, Theory Ec Dev"),
    (4, "Shane S, 2000, V11, P448, Organ Sci"),
    (4, "Reynolds P, 2009, V33, P151, Small Bus Econ"),
    (4, "Shane S, 2004, V19, P767, J Bus Venturing"),
    (4, "Curtain R, 2004, P477, Hdb Entrepreneurial"),
    (4, "Dunn T, 2000, V18, P282, J Labor Econ"),
    (4, "Liao J, 2006, V27, P23, Small Bus Econ"),
    (4, "Gartner W, 2003, P195, Hdb Entrepreneurship"),
    (4, "Brush C, 2008, V23, P547, J Bus Venturing"),
    (4, "Bates T, 1990, V72, P551, Rev Econ Stat"),
    (4, "Bruderl J, 1998, V10, P213, Small Bus Econ"),
    (4, "Gatewood E, 2002, V27, P187, Entrep Theory Pract"),
    (4, "Stinchcombe A, 1965, P142, Hdb Org"),
    (4, "Baron R, 1998, V13, P275, J Bus Venturing"),
    (3, "Bhide A, 2000, Origin Evolution New"),
    (3, "Chen C, 1998, V13, P295, J Bus Venturing"),
    (3, "Starr J, 1990, V11, P79, Strategic Manage J"),
    (3, "Busenitz L, 1997, V12, P9, J Bus Venturing"),
    (3, "Shapiro A, 1982, P72, Ency Entrepreneurshi"),
    (3, "Buttner E, 1997, V35, P34, J Small Bus Manage"),
    (3, "Cassar G, 2007, V19, P89, Entrep Region Dev"),
    (3, "Shane S, 2003, V13, P257, Human Resource Manag"),
    (3, "Birley S, 1994, V9, P7, J Bus Venturing"),
    (3, "Bates T, 2005, V20, P343, J Bus Venturing"),
    (3, "Meyer J, 1977, V83, P340, Am J Sociol"),
    (3, "Hair J, 1995, Multivariate Data An"),
    (3, "Manolova T, 2007, V31, P407, Entrep Theory Pract"),
    (3, "Gartner W, 2003, P103, New Movements In Entrepreneurship"),
    (3, "Gatewood E, 1993, V17, P91, Entrep Theory Pract"),
    (3, "Gatewood E, 2004, P153, Hdb Entrepreneurial"),
    (3, "Hayek F, 1945, V35, P519, Am Econ Rev"),
    (3, "Honig B, 2004, V30, P29, J Manage"),
    (3, "Hurst E, 2004, V112, P319, J Polit Econ"),
    (3, "Larson A, 1993, V17, P5, Entrep Theorie Data An"),
    (3, "Low M, 1997, V12, P435, J Bus Venturing"),
    (3, "Lichtenstein B, 2007, V22, P236, J Bus Venturing"),
    (3, "Holtzkekin D, 1994, V102, P53, J Polit Econ"),
    (3, "Evans D, 1989, V97, P808, J Polit Econ"),
    (3, "Rotefoss B, 2005, V17, P109, Entrep Region Dev"),
    (3, "Robinson P, 1994, V9, P141, J Bus Venturing"),
    (3, "Davidsson P, 2006, V2, Foundations And Trends In Entrepreneurship"),
    (3, "Cliff J, 1998, V13, P523, J Bus Venturing"),
    (3, "Ruef M, 2010, P1, Kauff Found Ser"),
    (3, "Curtin R, 2004, Hdb Entrepreneurial"),
    (3, "Reynolds P, 2004, V1, P495, Hdb Entrepreneurial"),
    (3, "Reynolds P, 2001, Global Entrepreneurs"),
    (3, "Douglas E, 2000, V15, P231, J Bus Venturing"),
    (3, "Parker S, 2004, Ec Self Employment E"),
    (3, "Reynolds P, 2004, V1, P453, Hdb Entrepreneurial"),
    (3, "Delmar F, 2000, V12, P1, Entrep Region Dev"),
    (3, "Delmar F, 2006, V4, Strategic Organization"),
    (3, "Ardichvili A, 2003, V18, P105, J Bus Venturing"),
    (3, "Ajzen I, 1991, V50, P179, Organ Behav Hum Dec"),
    (3, "Xu H, 2004, V2, P331, Strateg Organ"),
    (3, "Wiklund J, 2003, V40, P1919, J Manage Stud"),
    (3, "Aldrich H, 1987, P154, Frontiers Entreprene"),
)


def filler_counts(n_docs: int, total_instances: int) -> list[int]:
    """n_docs counts in {1, 2} summing to total_instances."""
    extras = total_instances - n_docs
    assert 0 <= extras <= n_docs, "filler distribution infeasible"
    return [2] * extras + [1] * (n_docs - extras)


def assemble_corpus(
    tag: str,
    n_articles: int,
    doc_counts: list[tuple[int, str]],
    title_stub: str,
    keyword: str,
) -> Corpus:
    """Spread each document over exactly ``count`` distinct articles,
    round-robin, so per-article reference sets stay duplicate-free."""
    per_article: list[list[str]] = [[] for _ in range(n_articles)]
    offset = 0
    for count, ref in doc_counts:
        assert count <= n_articles
        for j in range(count):
            per_article[(offset + j) % n_articles].append(ref)
        offset += count
    recs = tuple(
        ArticleRecord(
            id=f"{tag}{i:04d}",
            authors=(f"Synthetic, A{i}",),
            title=f"{title_stub} {i:04d}",
            source="Synthetic Journal",
            year=2010,
            keywords=(keyword,),
            cited_raw=tuple(refs),
        )
        for i, refs in enumerate(per_article)
    )
    return Corpus(records=recs)


def _with_filler(top, n_total_docs, n_total_refs, filler_stub):
    top_refs = sum(c for c, _ in top)
    n_filler = n_total_docs - len(top)
    counts = filler_counts(n_filler, n_total_refs - top_refs)
    filler = [
        (count, f"{filler_stub}{i:04d} Z, 1900, V1, P{i}, Synthetic Filler Series")
        for i, count in enumerate(counts)
    ]
    return list(top) + filler


@lru_cache(maxsize=1)
def gem_corpus() -> Corpus:
    docs = _with_filler(GEM_TOP, GEM_DISTINCT_DOCS, GEM_TOTAL_REFS, "Gemfill")
    return assemble_corpus(
        "G", GEM_ARTICLES, docs,
        "Synthetic global entrepreneurship monitor study", "entrepreneurship",
    )


@lru_cache(maxsize=1)
def psed_corpus() -> Corpus:
    docs = _with_filler(PSED_TOP, PSED_DISTINCT_DOCS, PSED_TOTAL_REFS, "Psedfill")
    return assemble_corpus(
        "P", PSED_ARTICLES, docs,
        "Synthetic panel study of entrepreneurial dynamics case", "entrepreneurial dynamics",
    )


# ---------------------------------------------------------------------------
# random corpora for oracle comparisons

_SURNAMES = [
    "Reynolds", "Wennekers", "Davidsson", "Shane", "North", "Carree", "Baumol",
    "Schumpeter", "Bosma", "Acs", "Minniti", "Krueger", "Gartner", "Carter",
    "Delmar", "Cooper", "Katz", "Aldrich", "Evans", "Kirzner", "Van Stel",
]
_SOURCES = [
    "Small Bus Econ", "J Bus Venturing", "Acad Manage Rev", "Am Econ Rev",
    "Entrep Theory Pract", "Global Entrepreneurs", "Theory Ec Dev",
    "Hdb Entrepreneurial", "Organ Sci", "Reg Stud",
]


def random_ref(rng: random.Random) -> str:
    surname = rng.choice(_SURNAMES)
    initial = rng.choice("ABCDEFGHJKLMNPRSTW")
    year = rng.randint(1950, 2012)
    parts = [f"{surname} {initial}", str(year)]
    if rng.random() < 0.7:
        parts.append(f"V{rng.randint(1, 120)}")
        parts.append(f"P{rng.randint(1, 999)}")
    parts.append(rng.choice(_SOURCES))
    return ", ".join(parts)


def random_corpus(rng: random.Random, *, max_articles: int = 50,
                  max_refs: int = 20, ref_pool: int = 40, tag: str = "R") -> Corpus:
    pool = [random_ref(rng) for _ in range(ref_pool)]
    n_articles = rng.randint(1, max_articles)
    recs = []
    for i in range(n_articles):
        n_refs = rng.randint(0, max_refs)
        cited = tuple(rng.choice(pool) for _ in range(n_refs))
        recs.append(
            ArticleRecord(
                id=f"{tag}{i:04d}",
                title=f"Random citing article {i}",
                cited_raw=cited,
            )
        )
    return Corpus(records=tuple(recs))
