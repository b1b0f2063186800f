#include "isoflow/catalog.hpp"

// Stored printed polynomial data. The digit strings are covered by checksum
// tests (values at z = 1 and z = -1) and, independently, by the functional
// identities they enter.

namespace isoflow {
namespace {

const std::vector<BigInt> kD2401 = {
    BigInt("1"), BigInt("196"), BigInt("-1302"), BigInt("14756"), BigInt("-15673"), 
    BigInt("-42168"), BigInt("111916"), BigInt("-82264"), BigInt("35231"), BigInt("-19852"), 
    BigInt("2954"), BigInt("308"), BigInt("-7")
};

const std::vector<BigInt> kD14641 = {
    BigInt("1"), BigInt("1210"), BigInt("-33033"), BigInt("2923492"), BigInt("5093605"), 
    BigInt("-385382514"), BigInt("3974726283"), BigInt("-14323974808"), BigInt("57392757037"), 
    BigInt("-291359180310"), BigInt("948497199067"), BigInt("-1642552094436"), 
    BigInt("1084042069649"), BigInt("1890240552750"), BigInt("-6610669151537"), 
    BigInt("9712525647792"), BigInt("-8608181312269"), BigInt("5384207244702"), 
    BigInt("-3223489742187"), BigInt("2175830922716"), BigInt("-1197743580033"), 
    BigInt("387221579866"), BigInt("-50897017743"), BigInt("-7864445336"), BigInt("5391243935"), 
    BigInt("-815789634"), BigInt("28366041"), BigInt("-5092956"), BigInt("207691"), 
    BigInt("2794"), BigInt("-11")
};

const std::vector<BigInt> kSextic28561 = {
    BigInt("1"), BigInt("-22"), BigInt("235"), BigInt("-228"), BigInt("39"), BigInt("26"), 
    BigInt("13")
};

const std::vector<BigInt> kD36_28561 = {
    BigInt("1"), BigInt("2388"), BigInt("-61098"), BigInt("19225300"), BigInt("606593049"), 
    BigInt("-1543922656"), BigInt("7856476560"), BigInt("-221753896032"), 
    BigInt("1621753072244"), BigInt("-4542779886736"), BigInt("2731418674664"), 
    BigInt("36717669656304"), BigInt("-200879613202428"), BigInt("547249607666784"), 
    BigInt("-934179604482832"), BigInt("1235038888776160"), BigInt("-1788854212778642"), 
    BigInt("3018407750933816"), BigInt("-4349780716415868"), BigInt("4419228090228152"), 
    BigInt("-2899766501472914"), BigInt("931940880451552"), BigInt("413258559018224"), 
    BigInt("-857795672629664"), BigInt("659989056851972"), BigInt("-304241349909008"), 
    BigInt("87636987790824"), BigInt("-14593362219920"), BigInt("1073204980340"), 
    BigInt("45138167200"), BigInt("-23660433008"), BigInt("2028597792"), BigInt("-29540327"), 
    BigInt("3238420"), BigInt("-73386"), BigInt("-492"), BigInt("1")
};

UniPolyQ from_ints(const std::vector<BigInt>& v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (const auto& x : v) c.emplace_back(x);
    return UniPolyQ(std::move(c));
}

}  // namespace

const UniPolyQ& printed_D2401() {
    static const UniPolyQ p = from_ints(kD2401);
    return p;
}
const UniPolyQ& printed_D14641() {
    static const UniPolyQ p = from_ints(kD14641);
    return p;
}
const UniPolyQ& printed_D28561_sextic() {
    static const UniPolyQ p = from_ints(kSextic28561);
    return p;
}
const UniPolyQ& printed_D28561_order36() {
    static const UniPolyQ p = from_ints(kD36_28561);
    return p;
}
UniPolyQ printed_D28561() { return printed_D28561_sextic() * printed_D28561_order36(); }

}  // namespace isoflow
