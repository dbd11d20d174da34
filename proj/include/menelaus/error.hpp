#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace menelaus {

enum class Errc {
    DanglingFace,
    DuplicateCell,
    SimplicialIdentityViolated,
    UnknownCell,
    OddCharacteristic,
    NotMComplex,
    NotACycle,
    IrregularCell,
    InvalidPairing,
    RepeatedLetter,
    NameCollision,
    NotAtomic,
    ParseError,
    MissingLetter,
    NotBijective,
    NameClash,
    CellNotFound,
    NuMismatch,
    NotACutTriangle,
    NotProper,
    BoundExceeded,
    SameTriangle,
    UnknownFixture,
    InternalInconsistency,
};

inline std::string_view errc_name(Errc c)
{
    switch (c) {
    case Errc::DanglingFace: return "DanglingFace";
    case Errc::DuplicateCell: return "DuplicateCell";
    case Errc::SimplicialIdentityViolated: return "SimplicialIdentityViolated";
    case Errc::UnknownCell: return "UnknownCell";
    case Errc::OddCharacteristic: return "OddCharacteristic";
    case Errc::NotMComplex: return "NotMComplex";
    case Errc::NotACycle: return "NotACycle";
    case Errc::IrregularCell: return "IrregularCell";
    case Errc::InvalidPairing: return "InvalidPairing";
    case Errc::RepeatedLetter: return "RepeatedLetter";
    case Errc::NameCollision: return "NameCollision";
    case Errc::NotAtomic: return "NotAtomic";
    case Errc::ParseError: return "ParseError";
    case Errc::MissingLetter: return "MissingLetter";
    case Errc::NotBijective: return "NotBijective";
    case Errc::NameClash: return "NameClash";
    case Errc::CellNotFound: return "CellNotFound";
    case Errc::NuMismatch: return "NuMismatch";
    case Errc::NotACutTriangle: return "NotACutTriangle";
    case Errc::NotProper: return "NotProper";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::SameTriangle: return "SameTriangle";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace menelaus
