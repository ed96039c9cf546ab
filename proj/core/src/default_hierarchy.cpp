// The shipped Index of Future Readiness taxonomy. Sub-element labels are kept
// exactly as published, including the absent BA5. Each published bullet is a
// single indicator; compound bullets are not split.

#include "ifr/taxonomy.hpp"

#include <initializer_list>

namespace ifr {
namespace {

constexpr auto kPos = Orientation::Positive;
constexpr auto kNeg = Orientation::Negative;

struct IndicatorRow {
  const char* id;
  const char* name;
  Orientation orientation;
  const char* units;
  bool provisional = false;
};

struct SubElementRow {
  const char* id;
  const char* element;
  const char* name;
  std::initializer_list<IndicatorRow> indicators;
};

// clang-format off
const std::initializer_list<SubElementRow> kRows = {
  // ---- GR: Government Resilience ----
  {"GR1", "GR", "Fiscal Buffers and Monetary Policy Space", {
    {"gr_inflation_rate", "Inflation Rate", kNeg, "percent"},                      // erodes policy space
    {"gr_public_debt_gdp", "Public Debt to GDP Ratio", kNeg, "percent of GDP"},   // less fiscal room
    {"gr_budget_balance_gdp", "Budget Balance as a Fraction of GDP", kPos, "percent of GDP"},  // surplus is a buffer
    {"gr_sovereign_credit_rating", "Sovereign Credit Rating", kPos, "rating scale (higher is better)"},
  }},
  {"GR2", "GR", "Diversification of Government Revenue", {
    {"gr_revenue_single_source_share", "Percentage of Government Revenue from a Single Dominant Source (e.g., oil)", kNeg, "percent of revenue"},  // concentration risk
    {"gr_revenue_variability_5y", "Variability of Government Revenue over the last five years", kNeg, "coefficient of variation"},  // volatility
  }},
  {"GR3", "GR", "Infrastructure and Digital Resilience", {
    {"gr_infrastructure_reliability", "Reliability of energy, transport, and communication systems", kPos, "index"},
    {"gr_public_cybersecurity", "Cybersecurity of government and public digital infrastructure", kPos, "index"},
    {"gr_swf_capacity_gdp", "Sovereign Wealth Fund capacity (e.g., as a percentage of GDP, indicating ability to finance emergency rebuilding)", kPos, "percent of GDP"},
  }},
  {"GR4", "GR", "Diplomatic Diversification", {
    {"gr_multilateral_engagement", "Measure of multilateral engagement (e.g., number of international agreements, participation in international organizations)", kPos, "count or index"},
    {"gr_visa_free_access", "Visa-free travel access for citizens (as a proxy for diplomatic reach and soft power)", kPos, "destinations"},
    {"gr_bilateral_trade_agreements", "Number of bilateral trade agreements in force", kPos, "count"},
  }},
  {"GR5", "GR", "Trade and Currency Buffers", {
    {"gr_foreign_reserves_gdp", "Foreign Reserves as a percentage of GDP (Reserve Adequacy)", kPos, "percent of GDP"},
    {"gr_current_account_gdp", "Current Account Balance as a percentage of GDP", kPos, "percent of GDP"},
    {"gr_exchange_rate_flexibility", "Exchange Rate Regime Flexibility", kPos, "index", true},   // direction not settled
    {"gr_trade_openness_gdp", "Trade as a fraction of GDP", kPos, "percent of GDP", true},      // openness vs exposure
  }},

  // ---- GA: Government Adaptive Capacity ----
  {"GA1", "GA", "Institutional Flexibility", {
    {"ga_egdi", "E-government Development Index (EGDI)", kPos, "index"},
    {"ga_voice_accountability", "Voice and Accountability Index (World Bank Governance Indicators)", kPos, "index"},
    {"ga_strategic_foresight", "Strategic Foresight Capacity (e.g., existence and effectiveness of national foresight units)", kPos, "index"},
    {"ga_political_stability", "Political Stability and Absence of Violence Index (World Bank Governance Indicators)", kPos, "index"},
    {"ga_rule_of_law", "Rule of Law Index (World Bank Governance Indicators)", kPos, "index"},
    {"ga_open_data", "Open Data Implementation Index", kPos, "index"},
    {"ga_legal_frameworks", "Legal Frameworks (e.g., World Bank Doing Business indicators related to legal enforceability)", kPos, "index"},
    {"ga_responsive_policy_making", "Responsive Policy Making (e.g., Polity Score, indicating democratic and adaptable governance)", kPos, "index"},
    {"ga_decentralization", "Decentralization Index (e.g., fiscal and administrative decentralization)", kPos, "index"},
    {"ga_regulatory_predictability", "Predictability of Regulatory Environment", kPos, "index"},
  }},
  {"GA2", "GA", "Adaptive Governance", {
    {"ga_regulatory_quality", "Regulatory Quality Index (World Bank Governance Indicators)", kPos, "index"},
    {"ga_government_effectiveness", "Government Effectiveness Index (World Bank Governance Indicators)", kPos, "index"},
    {"ga_bureaucracy_burden", "Perceived Burden of Bureaucracy (e.g., survey data)", kNeg, "survey index (higher is more burden)"},
  }},
  {"GA3", "GA", "Labor Market Regulatory Flexibility", {
    {"ga_ease_hiring_firing", "Ease of Hiring/Firing (e.g., OECD Employment Protection Legislation Index)", kPos, "index (higher is easier)"},
    {"ga_retraining_effectiveness", "Effectiveness of National Retraining Systems", kPos, "index"},
    {"ga_labor_mobility_index", "Labor Mobility Index (e.g., inter-sectoral and geographical mobility facilitation)", kPos, "index"},
  }},
  {"GA4", "GA", "Environmental and Sustainability Governance (Investment in Innovation and Green Structure)", {
    {"ga_renewable_share", "Renewable Energy Share in Total Energy Consumption", kPos, "percent"},
    {"ga_renewable_adoption", "Renewable Energy Adoption Rates", kPos, "percent per year"},
    {"ga_climate_resilience_policy", "Climate Resilience Policies and Investments", kPos, "index"},
    {"ga_epi", "Environmental Performance Index (EPI)", kPos, "index"},
  }},
  {"GA5", "GA", "Capacity for Policy Experimentation and Entrepreneurial State", {
    {"ga_policy_sandboxes", "Existence and utilization of regulatory sandboxes or pilot programs for policy innovation", kPos, "index"},
  }},

  // ---- BR: Business Resilience ----
  {"BR1", "BR", "Robust Risk Management and Capital Buffers", {
    {"br_bank_capital_ratio", "Banking System Solvency (e.g., Bank Capital Ratios)", kPos, "percent"},
    {"br_bank_oversight", "Banking System Regulation and Oversight (e.g., Non-performing Loan Ratios, Financial Supervision scores)", kPos, "index (higher is stronger oversight)"},
    {"br_market_cap_gdp", "Stock Market Capitalization as a percentage of GDP", kPos, "percent of GDP"},
  }},
  {"BR2", "BR", "Infrastructure and Digital Resilience (Private Sector)", {
    {"br_private_cybersecurity", "Cybersecurity of private business institutions and critical infrastructure", kPos, "index"},
  }},
  {"BR3", "BR", "GDP and Trade Diversification", {
    {"br_gdp_sector_concentration", "Sectorial Concentration in GDP", kNeg, "concentration index"},        // concentration is fragility
    {"br_export_sector_concentration", "Sectorial Concentration in Exports", kNeg, "concentration index"},
  }},
  {"BR4", "BR", "Supply Chain Redundancy and Flexibility", {
    {"br_energy_decentralization", "Decentralization of energy systems", kPos, "index"},
    {"br_food_decentralization", "Decentralization of food production and distribution", kPos, "index"},
    {"br_supply_chain_concentration", "Supply Chain Concentration Index (lower concentration indicates higher resilience)", kNeg, "concentration index"},
    {"br_lpi", "Logistics Performance Index (LPI)", kPos, "index"},
  }},
  {"BR5", "BR", "Formality of Economic Activity", {
    {"br_informal_economy_gdp", "Informal Economy Size (as a percentage of GDP, inversely related to resilience)", kNeg, "percent of GDP"},
    {"br_black_market_premium", "Black Market Premium (as an indicator of economic distortion)", kNeg, "percent"},
  }},

  // ---- BA: Business Adaptive Capacity ----
  {"BA1", "BA", "Innovation Systems and R&D", {
    {"ba_rd_spending_gdp", "Research & Development (R&D) Spending as a percentage of GDP", kPos, "percent of GDP"},
    {"ba_educational_attainment", "Educational Attainment (e.g., PISA scores, tertiary education enrollment)", kPos, "score"},
    {"ba_firm_digital_access", "Digital Infrastructure Access for Firms (e.g., internet access, broadband penetration)", kPos, "percent of firms"},
    {"ba_gii_ranking", "Global Innovation Index (GII) ranking", kNeg, "rank position (1 is best)"},  // a rank: smaller is better
    {"ba_firms_online_presence", "Percentage of Firms with an Online Presence (Website)", kPos, "percent of firms"},
  }},
  {"BA2", "BA", "Market Dynamism", {
    {"ba_sme_ecosystem_health", "SME Ecosystem Health (e.g., new firm entry rate, survival rate of startups)", kPos, "index"},
    {"ba_competition_policy", "Competition Policy Effectiveness (e.g., market concentration indices)", kPos, "index (higher is more effective)"},
    {"ba_entrepreneurial_culture", "Entrepreneurial Culture Index (e.g., survey-based measures of entrepreneurial attitudes)", kPos, "index"},
    {"ba_ease_closing_business", "Ease of Closing a Business (World Bank Doing Business indicator)", kPos, "score"},
    {"ba_customs_clearance_time", "Customs Clearance Time", kNeg, "days"},  // delay
    {"ba_global_mobility_access", "Global Mobility Access (e.g., ease of international business travel)", kPos, "index"},
    {"ba_logistics_competence", "Logistics Competence (e.g., LPI sub-components)", kPos, "index"},
  }},
  {"BA3", "BA", "Economic Complexity and Sophistication", {
    {"ba_eci", "Economic Complexity Index (Hausmann)", kPos, "index"},
    {"ba_high_tech_exports", "High-Technology Exports as a percentage of total exports", kPos, "percent of exports"},
  }},
  {"BA4", "BA", "Capital Flexibility", {
    {"ba_venture_capital_gdp", "Venture Capital Investment as a percentage of GDP", kPos, "percent of GDP"},
    {"ba_fdi_gdp", "Foreign Direct Investment (FDI) as a percentage of GDP", kPos, "percent of GDP"},
    {"ba_private_credit_gdp", "Domestic Credit to Private Sector as a percentage of GDP", kPos, "percent of GDP"},
  }},
  {"BA6", "BA", "Institutions Supporting Business Experimentation and Learning", {
    {"ba_business_sandboxes_collaboration", "Measures of regulatory sandboxes for business innovation, industry-academia collaboration indices.", kPos, "index"},
  }},

  // ---- CR: Citizen Resilience ----
  {"CR1", "CR", "Social Safety Nets and Financial Security", {
    {"cr_social_spending_gdp", "Social Spending as a percentage of GDP (Welfare Programs)", kPos, "percent of GDP"},
    {"cr_unemployment_benefits", "Unemployment Benefits Coverage and Adequacy", kPos, "index"},
    {"cr_health_coverage", "Health Coverage (e.g., percentage of population with access to healthcare)", kPos, "percent of population"},
    {"cr_poverty_gap_coverage", "Poverty Gap Coverage (e.g., percentage of the poverty gap covered by transfers)", kPos, "percent"},
    {"cr_household_savings_rate", "Household Savings Rate", kPos, "percent of disposable income"},
    {"cr_cumulated_savings_pc", "Cumulated Savings per capita", kPos, "currency per capita"},
    {"cr_income_after_housing", "Average Percentage of Disposable Income Available after Housing Costs (rent or mortgage)", kPos, "percent"},
    {"cr_tax_progressivity", "Progressivity of the Tax System", kPos, "index"},
    {"cr_account_ownership", "Account Ownership at Financial Institutions (percentage of population over 15)", kPos, "percent of population 15+"},
  }},
  {"CR2", "CR", "Emergency Savings and Financial Buffers", {
    {"cr_individual_savings_rate", "Individuals savings rate", kPos, "percent"},
  }},
  {"CR3", "CR", "Financial Literacy and Risk Management", {
    {"cr_financial_literacy", "Percentage of population with financial literacy", kPos, "percent of population"},
  }},
  {"CR4", "CR", "Social Capital and Trust", {
    {"cr_institutional_trust", "Public Trust in Institutions (e.g., World Values Survey data)", kPos, "percent"},
    {"cr_social_cohesion", "Social Cohesion Index (e.g., World Values Survey data, measures of civic participation)", kPos, "index"},
    {"cr_gini", "Gini Coefficient (as an inverse measure of income equality and potential social friction)", kNeg, "coefficient"},  // inequality
    {"cr_civic_engagement", "Civic Engagement Rates (e.g., volunteerism, participation in community organizations)", kPos, "percent"},
  }},

  // ---- CA: Citizen Adaptability ----
  {"CA1", "CA", "Lifelong Learning and Skill Development", {
    {"ca_educational_attainment", "Overall Educational Attainment (e.g., average years of schooling, tertiary enrollment rates)", kPos, "years"},
    {"ca_reskilling_participation", "Availability and Participation in Post-Education Re-skilling Programs", kPos, "percent of adults"},
    {"ca_upskilling_participation", "Availability and Participation in Post-Education Up-skilling Programs", kPos, "percent of adults"},
    {"ca_forward_looking_education", "Emphasis on Forward-Looking Education (e.g., curricula fostering curiosity, critical thinking, and creativity)", kPos, "index"},
    {"ca_stem_graduates_pc", "STEM Graduates per capita", kPos, "per 1000 population"},
    {"ca_intl_student_net_flow", "Net Flow of International Students (indicating openness to global knowledge exchange)", kPos, "students"},
    {"ca_household_internet", "Household Internet Penetration Rate", kPos, "percent of households"},
  }},
  {"CA2", "CA", "Labor Mobility", {
    {"ca_sectoral_mobility", "Sectoral Labor Mobility Rates", kPos, "percent per year"},
    {"ca_geographic_mobility", "Geographical Labor Mobility Rates", kPos, "percent per year"},
  }},
  {"CA3", "CA", "Population Dynamics", {
    {"ca_working_age_growth", "Working Age Population Growth Rate", kPos, "percent per year"},
    {"ca_urban_population_growth", "Urban Population Growth Rate (as an indicator of demographic shifts and potential for agglomeration effects)", kPos, "percent per year", true},  // agglomeration vs strain
  }},
  {"CA4", "CA", "Digital Connectivity and Skills", {
    {"ca_digital_skills", "Digital Skills among the Population (e.g., digital literacy rates)", kPos, "percent of population"},
    {"ca_e_participation", "E-participation Index (e.g., citizen engagement in online governance)", kPos, "index"},
    {"ca_5g_subscriptions", "Mobile Broadband 5G Subscriptions (households)", kPos, "per 100 households"},
    {"ca_internet_bandwidth", "Internet Bandwidth Speed (households)", kPos, "Mbit/s"},
    {"ca_digital_payments", "Access to Digital Payments (e.g., percentage of population using mobile money or online banking)", kPos, "percent of population"},
  }},
  {"CA5", "CA", "Proactive Financial Planning", {
    {"ca_long_term_planning", "Ability to engage in long-term financial planning", kPos, "percent of population"},
  }},
};
// clang-format on

}  // namespace

HierarchySpec build_default_ifr_hierarchy() {
  HierarchySpec spec;
  spec.name = "Index of Future Readiness";
  spec.version = "preliminary-1";
  for (const auto& row : kRows) {
    SubElementDef sub;
    sub.id = row.id;
    sub.element = *ElementId::from_code(row.element);
    sub.display_name = row.name;
    for (const auto& ind : row.indicators) {
      sub.indicator_ids.emplace_back(ind.id);
      spec.indicators.push_back(IndicatorDef{ind.id, ind.name, row.id, ind.orientation,
                                             ind.units, std::nullopt, ind.provisional});
    }
    spec.sub_elements.push_back(std::move(sub));
  }
  return spec;
}

}  // namespace ifr
