"""Main FastAPI application entry point."""

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from .config import settings, setup_logging
from .api.routes import router as api_router

setup_logging(settings.log_dir, settings.log_level)

# Create FastAPI app
app = FastAPI(
    title=settings.app_name,
    description="Exact Moore-Penrose inverses of matrices and infinite block operators",
    version="0.1.0",
)

# Configure CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include API routes
app.include_router(api_router, prefix="/api")


@app.get("/")
async def root():
    return {
        "name": settings.app_name,
        "version": "0.1.0",
        "docs": "/docs",
        "api": "/api",
    }


def run():
    """Run the application with uvicorn."""
    import uvicorn

    uvicorn.run(
        "penrose.main:app",
        host=settings.api_host,
        port=settings.api_port,
        reload=settings.debug,
    )


if __name__ == "__main__":
    run()
