#ifndef MICROLOG_MICROLOG_HPP
#define MICROLOG_MICROLOG_HPP

#include "microlog/formula.hpp"
#include "microlog/kata.hpp"
#include "microlog/kernel.hpp"
#include "microlog/oracle.hpp"
#include "microlog/prover.hpp"
#include "microlog/serialize.hpp"
#include "microlog/syntax.hpp"

#endif  // MICROLOG_MICROLOG_HPP
