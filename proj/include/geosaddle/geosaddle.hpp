// Umbrella header.
#pragma once

#include <geosaddle/bipoly.hpp>
#include <geosaddle/certify.hpp>
#include <geosaddle/errors.hpp>
#include <geosaddle/expr.hpp>
#include <geosaddle/field.hpp>
#include <geosaddle/jet.hpp>
#include <geosaddle/oracle.hpp>
#include <geosaddle/path.hpp>
#include <geosaddle/quadform.hpp>
#include <geosaddle/rational.hpp>
#include <geosaddle/render.hpp>
#include <geosaddle/unipoly.hpp>
#include <geosaddle/vec2.hpp>
