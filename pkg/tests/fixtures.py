"""Reference matrices and vectors used across the test modules."""

from tournaments.core import BinaryMatrix


def M(rows: str) -> BinaryMatrix:
    return BinaryMatrix.from_lists(rows.split())


LOOPY_5 = M("01100 01101 00011 11001 10001")
LOOPY_5_SCORES = (2, 3, 2, 3, 2)
LOOPY_5_COLUMNS = (2, 3, 2, 1, 4)
LOOPY_5_LOSING = (3, 2, 3, 2, 3)

HANKEL_5 = M("00011 10001 11000 01100 00110")
HANKEL_5_GRAPH = M("11000 10001 00011 00110 01100")

SKEW_5 = M("01000 00101 10001 10100 00010")

SKEW_7 = M("0010000 1001001 0101011 1000001 1101010 1001001 0000100")
SKEW_7_SCORES = (1, 3, 4, 2, 4, 3, 1)

HANKEL_BUILD_R = (1, 2, 2, 3, 4, 4, 5)
HANKEL_BUILD_OUT = M("0100000 0010010 1000100 1110000 1101010 1011001 1111100")
HANKEL_BUILD_CHAIN = "(1,2,2,3,3,4) ->a (2,1,2,1) ->pi (1,1,2,2) ->a (1,0) ->pi (0,1)"

SKEW_BUILD_R = (2, 2, 4, 2, 4, 2, 2)
SKEW_BUILD_OUT = M("0100100 0001001 1101010 1000001 0101011 1001000 0010010")
SKEW_BUILD_CHAIN = "(2,1,3,3,1,2) ->pi (1,2,3,3,2,1) ->a (1,1,1,1) ->a (0,0)"

HANKEL_PAIR = (
    M("0000001 1000010 1100000 1110000 1111000 1011100 0111110"),
    M("0100000 0011000 1000100 1010010 1101010 1110001 1111100"),
)
HANKEL_PAIR_MOVES = "Q 7 5 3 1\nHP3 3 2 1\nH3M 6\n"

HANKEL_LOOPY_5 = M("00011 11001 11100 01110 00110")

SKEW_PAIR = (
    M("00100 10001 01010 10001 00100"),
    M("00010 10100 10001 00101 01000"),
)
SKEW_PAIR_MOVES = "SP3 1 3 4\n"
