#include "ceva/canonical.hpp"

namespace ceva {

StructureMatrix canonical_matrix(CanonicalLabel label) {
    auto m = [](Vec3 r0, Vec3 r1, Vec3 r2) { return StructureMatrix{Mat3::from_rows(r0, r1, r2)}; };
    switch (label) {
    case CanonicalLabel::E0:
        return m({0, 0, 0}, {0, 0, 0}, {0, 0, 0});
    case CanonicalLabel::E1:
        return m({1, 1, 0}, {-1, -1, 0}, {0, 0, 0});
    case CanonicalLabel::E2:
        return m({1, 1, 0}, {-1, -1, 0}, {1, 1, 0});
    case CanonicalLabel::E3:
        return m({1, 1, 0}, {-1, -1, 0}, {-1, -1, 0});
    case CanonicalLabel::E4:
        return m({1, 0, 0}, {0, 0, 0}, {0, 0, 0});
    case CanonicalLabel::E5:
        return m({1, 0, 0}, {0, 0, 0}, {1, 0, 0});
    case CanonicalLabel::E6:
        return m({1, 0, 0}, {0, 0, 0}, {-1, 0, 0});
    case CanonicalLabel::E7:
        return m({1, 0, 0}, {1, 0, 0}, {1, 0, 0});
    case CanonicalLabel::E8:
        return m({1, 0, 0}, {1, 0, 0}, {-1, 0, 0});
    case CanonicalLabel::E9:
        return m({1, 0, 0}, {-1, 0, 0}, {-1, 0, 0});
    case CanonicalLabel::E10:
        return m({0, 0, 0}, {0, 0, 0}, {1, 0, 0});
    case CanonicalLabel::E11:
        return m({0, 0, 0}, {1, 0, 0}, {1, 0, 0});
    case CanonicalLabel::E12:
        return m({0, 0, 0}, {1, 0, 0}, {-1, 0, 0});
    }
    return m({0, 0, 0}, {0, 0, 0}, {0, 0, 0});
}

std::string to_string(CanonicalLabel label) {
    return "E" + std::to_string(static_cast<int>(label));
}

CanonicalLabel label_from_string(const std::string& s) {
    for (int i = 0; i < kNumLabels; ++i) {
        CanonicalLabel l = static_cast<CanonicalLabel>(i);
        if (to_string(l) == s)
            return l;
    }
    throw ConfigError("unknown canonical label '" + s + "'");
}

CanonicalLabel label_from_index(int i) {
    if (i < 0 || i >= kNumLabels)
        throw ConfigError("canonical label index out of range");
    return static_cast<CanonicalLabel>(i);
}

} // namespace ceva
