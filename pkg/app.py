from dotenv import load_dotenv

load_dotenv()

import logging

from flask import Flask
from config import Config
from routes.api import api_bp
from services.suite_manager import SUITE_MODULES, suite_manager


def create_app():
    app = Flask(__name__)
    app.config.from_object(Config)

    # Register Blueprints
    app.register_blueprint(api_bp)

    return app

app = create_app()

if __name__ == '__main__':
    logging.basicConfig(level=Config.LOG_LEVEL)
    print("🚀 Starting GL(2) toric period verifier...")
    print("📊 Available suites:")

    registered = suite_manager.names()
    for module_name in SUITE_MODULES:
        name = module_name.rsplit('.', 1)[-1].replace('_', '-')
        status = "✓ Ready" if name in registered else "✗ Error"
        print(f"   - {name}: {status}")

    print("\n🌐 API will be available at: http://localhost:5000/api/suites")
    app.run(debug=Config.DEBUG, host='0.0.0.0', port=5000)
