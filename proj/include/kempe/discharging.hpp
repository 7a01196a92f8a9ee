#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "kempe/configurations.hpp"
#include "kempe/plane.hpp"

namespace kempe {

using Charge = boost::rational<long long>;

/// "p/q", or "p" for integers.
std::string to_string(const Charge& c);

enum class HolderKind { Vertex, Face, Pot };

struct Holder {
  HolderKind kind = HolderKind::Vertex;
  int index = 0;
  friend bool operator==(const Holder&, const Holder&) = default;
};

/// "v3", "f0", "pot1".
std::string to_string(const Holder& h);

struct Transfer {
  Holder source;
  Holder sink;
  Charge amount;
  std::string rule;
};

/// Charges on vertices, faces and pots with an append-only transfer log.
class ChargeLedger {
 public:
  ChargeLedger() = default;
  ChargeLedger(std::vector<Charge> vertices, std::vector<Charge> faces, int pots);

  const Charge& charge(const Holder& h) const;
  const Charge& initial(const Holder& h) const;
  void transfer(const Holder& source, const Holder& sink, const Charge& amount,
                const std::string& rule);

  /// Sum over every holder, recomputed from the current charges.
  Charge total() const;
  std::vector<Holder> holders() const;
  const std::vector<Transfer>& log() const noexcept { return log_; }
  /// Net change of h from the transfers tagged `rule`.
  Charge delta(const Holder& h, const std::string& rule) const;

 private:
  Charge& slot(const Holder& h);
  std::vector<Charge> charge_[3];
  std::vector<Charge> initial_[3];
  std::vector<Transfer> log_;
};

struct RuleAudit {
  std::string rule;
  Charge total_before;
  Charge total_after;
  std::size_t transfers = 0;
  bool conserved() const { return total_before == total_after; }
};

struct DischargeReport {
  AuditVariant variant = AuditVariant::Lemma1;
  std::vector<Face> faces;
  /// Pot index per vertex, -1 outside the special subgraph.
  std::vector<int> pot_of;
  int pots = 0;
  int components = 0;
  ChargeLedger ledger;
  Charge initial_total;
  /// -8 per connected component with edges.
  Charge expected_total;
  std::vector<RuleAudit> rules;
  /// Holders with negative final charge, in holders() order.
  std::vector<Holder> negative;
  /// Incidences counted with multiplicity > 1 and rule inputs that had no
  /// pot to draw from.
  std::vector<std::string> notes;

  bool euler_ok() const { return initial_total == expected_total; }
  bool conserved() const;
};

/// Applies R1-R3 (lemma1) or R1-R5 (lemma2) in order. Within a rule all
/// amounts are computed from the state before the rule. Throws
/// PreconditionError when the minimum degree is below 2 or the embedding
/// is not plane.
DischargeReport run_discharging(const PlaneGraph& pg, AuditVariant variant);

/// Per-holder table: holder, initial, one column per rule, final.
std::string format_ledger(const DischargeReport& report);

}  // namespace kempe
