import sys
from pathlib import Path

import pytest

from deplen import DepTree

sys.path.insert(0, str(Path(__file__).parent))

FIG1_HEADS = (2, 0, 2, 5, 2)
FIG1_FORMS = ("John", "threw", "out", "the", "trash")
FIG1_UPOS = ("PROPN", "VERB", "ADP", "DET", "NOUN")
FIG1_DEPRELS = ("nsubj", "root", "compound:prt", "det", "obj")

# "John threw the trash out": John=1, threw=2, the=3, trash=4, out=5
FIG3_ORDER = (1, 2, 5, 3, 4)

# the three random trees over A..E, attested in identity order
FIG2_HEADS = (
    (0, 5, 1, 3, 3),   # edges 1-3, 3-4, 3-5, 5-2; total length 8
    (4, 4, 1, 0, 1),   # edges 1-3, 1-5, 4-1, 4-2; total length 11
    (2, 5, 5, 5, 0),   # edges 2-1, 5-2, 5-3, 5-4; total length 7
)
FIG2_DEPLENS = (8, 11, 7)

FIG1_CONLLU = """\
# sent_id = fig1
# text = John threw out the trash
1\tJohn\t_\tPROPN\t_\t_\t2\tnsubj\t_\t_
2\tthrew\t_\tVERB\t_\t_\t0\troot\t_\t_
3\tout\t_\tADP\t_\t_\t2\tcompound:prt\t_\t_
4\tthe\t_\tDET\t_\t_\t5\tdet\t_\t_
5\ttrash\t_\tNOUN\t_\t_\t2\tobj\t_\t_

"""


@pytest.fixture
def fig1_tree():
    return DepTree(FIG1_HEADS, forms=FIG1_FORMS, upos=FIG1_UPOS,
                   deprels=FIG1_DEPRELS, sentence_id="fig1")


@pytest.fixture
def star3():
    # head 1 with two leaf dependents, attested 1 2 3
    return DepTree((0, 1, 1), sentence_id="star3")


@pytest.fixture
def chain3():
    # 1 -> 2 -> 3
    return DepTree((0, 1, 2), sentence_id="chain3")
