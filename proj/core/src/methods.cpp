#include "grosslip/solver.hpp"

namespace grosslip {

std::optional<MethodId> parse_method_id(std::string_view id) {
    for (MethodId m : all_method_ids())
        if (to_string(m) == id) return m;
    return std::nullopt;
}

std::string to_string(MethodId id) {
    std::string out =
        id.characteristic == CharacteristicKind::geometric ? "geom-" : "inf-";
    switch (id.estimator) {
        case EstimatorKind::apriori: return out + "al";
        case EstimatorKind::global: return out + "gl";
        case EstimatorKind::maximum_local: return out + "ltm";
        case EstimatorKind::maximum_additive_local: return out + "ltma";
    }
    return out + "?";
}

const std::vector<MethodId>& all_method_ids() {
    static const std::vector<MethodId> ids = [] {
        std::vector<MethodId> out;
        for (CharacteristicKind c :
             {CharacteristicKind::geometric, CharacteristicKind::information})
            for (EstimatorKind e :
                 {EstimatorKind::apriori, EstimatorKind::global, EstimatorKind::maximum_local,
                  EstimatorKind::maximum_additive_local})
                out.push_back({c, e});
        return out;
    }();
    return ids;
}

}  // namespace grosslip
