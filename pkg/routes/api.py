from flask import Blueprint, jsonify, request

from models.errors import InvalidDataError, UsageError
from models.suite_config import SuiteConfig
from services.global_constants import nonvanishing_threshold, sigma_bounds
from services.suite_manager import ALL, suite_manager
from tools.report_writer import load_latest

api_bp = Blueprint('api', __name__, url_prefix='/api')


@api_bp.route('/suites')
def api_suites():
    """
    API endpoint listing the registered suites in run order.
    """
    return jsonify({'suites': suite_manager.list_suites()})


@api_bp.route('/suites/<name>/run', methods=['POST'])
def api_run_suite(name):
    """
    API endpoint to run one suite. The JSON body carries SuiteConfig fields.
    """
    if name != ALL and suite_manager.get_suite(name) is None:
        return jsonify({'error': f"Unknown suite '{name}'"}), 404

    data = request.get_json(silent=True)
    if data is None:
        data = {}
    if not isinstance(data, dict):
        return jsonify({'error': 'Expected a JSON object'}), 400

    try:
        cfg = SuiteConfig.from_dict({**data, 'suite': name})
        report = suite_manager.run_suite(cfg)
    except (UsageError, TypeError) as e:
        return jsonify({'error': str(e)}), 400

    return jsonify(report.to_dict())


@api_bp.route('/constants/sigma-bounds/<int:p>')
def api_sigma_bounds(p):
    """
    API endpoint for the bounds on Sigma at a place of norm p.
    """
    try:
        lower, upper, limit = sigma_bounds(p)
    except InvalidDataError as e:
        return jsonify({'error': str(e)}), 400

    return jsonify({
        'p': p,
        'lower': str(lower),
        'upper': str(upper),
        'limit': limit,
        'lower_positive': lower > 0,
        'threshold': float(nonvanishing_threshold()),
    })


@api_bp.route('/reports/latest')
def api_latest_report():
    """
    API endpoint returning the most recent report: this process first, then latest.json.
    """
    if suite_manager.latest is not None:
        return jsonify(suite_manager.latest.to_dict())

    report = load_latest()
    if report is None:
        return jsonify({'error': 'No report found. Run a suite first.'}), 404

    return jsonify(report)
