#include "latcube/published.hpp"

namespace latcube::published {

namespace {

constexpr std::array<i64, 100> kText{
    1, 9, 36, 100, 229, 473, 910, 1648, 2795, 4469, 6818, 10032, 14315, 19907, 27190, 36502, 48233,
    62803, 80736, 102550, 128847, 160271, 197516, 241314, 292737, 352591, 421764, 501204, 592257,
    696281, 814450, 948112, 1098607, 1267367, 1456292, 1666998, 1901633, 2162179, 2450440, 2768346,
    3117935, 3501389, 3923178, 4384792, 4889323, 5439155, 6037660, 6687358, 7391669, 8154671,
    8979750, 9870158, 10830095, 11862711, 12972046, 14161848, 15436931, 16801993, 18263634,
    19825948, 21493019, 23269647, 25160816, 27171482, 29308957, 31577319, 33986616, 36540004,
    39244371, 42106267, 45131996, 48327502, 51700279, 55258019, 59011634, 62965766, 67132037,
    71515527, 76127374, 80973598, 86062187, 91401297, 96999986, 102866282, 109014085, 115457359,
    122206348, 129266410, 136648555, 144364071, 152426724, 160843660, 169626467, 178787563,
    188347314, 198309846, 208694461, 219509943, 230767760, 242483634,
};

constexpr std::array<i64, 50> kWorksheet{
    1, 9, 36, 100, 229, 473, 910, 1648, 2795, 4469, 6818, 10032, 14315, 19907, 27298, 36886, 49133,
    64531, 83784, 107542, 136551, 171599, 213524, 263202, 321849, 390415, 469932, 561492, 667305,
    789317, 929098, 1088500, 1269367, 1473635, 1703708, 1961706, 2251289, 2575291, 2936272, 3337026,
    3780455, 4269605, 4813854, 5414560, 6076915, 6804587, 7603120, 8476390, 9430481, 10471175,
};

}  // namespace

std::span<const i64> text_sequence() { return kText; }

std::span<const i64> worksheet_sequence() { return kWorksheet; }

}  // namespace latcube::published
