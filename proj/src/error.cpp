#include "tadpole/error.hpp"

namespace tadpole {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::NotATadpole: return "NotATadpole";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::UnknownStartVertex: return "UnknownStartVertex";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::IncompleteTour: return "IncompleteTour";
    case ErrorKind::AuditViolation: return "AuditViolation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NonterminatingExplorer: return "NonterminatingExplorer";
    case ErrorKind::AccountingMismatch: return "AccountingMismatch";
    case ErrorKind::AdviceMismatch: return "AdviceMismatch";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace tadpole
