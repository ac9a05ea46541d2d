// API base URL for the catalog server. Leave empty when the UI is
// served by the catalog server itself (rescat serve --ui); set to e.g.
// "http://127.0.0.1:8080" when the assets are hosted elsewhere.
window.RESCAT_API_BASE = "";
